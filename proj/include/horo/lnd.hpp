// Monoid algebras K[M] over Q with the derivations f_l -> c<rho,l> f_{l+mu}
// and their exponentials.

#ifndef HORO_LND_HPP
#define HORO_LND_HPP

#include "horo/lattice.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace horo {

/// A finite sum of monomials f_l with nonzero rational coefficients.
class AlgebraElement {
public:
  using Terms = std::map<IntVector, Rational, LexLess>;

  AlgebraElement() = default;
  static AlgebraElement monomial(const IntVector& weight, const Rational& coeff = Rational(1));
  /// Builds from (weight, coefficient) pairs, summing repeated weights.
  static AlgebraElement from_terms(const std::vector<std::pair<IntVector, Rational>>& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const IntVector& weight) const;
  /// Shared length of all weights; -1 for the zero element.
  Eigen::Index rank() const { return terms_.empty() ? -1 : terms_.begin()->first.size(); }

  void add_term(const IntVector& weight, const Rational& coeff);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
  /// f_l f_n = f_{l+n}
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

  /// e.g. "2*f(1,3) - 1/2*f(0,0)"; "0" for the zero element.
  std::string str() const;

private:
  Terms terms_;
};

struct DerivationSpec {
  LatticeCovector rho;
  LatticeVector mu;
  Rational c{1};
};

/// Checks <rho,mu> = -1 and c != 0; throws DomainError (DimensionError on rank mismatch).
DerivationSpec make_derivation(const LatticeCovector& rho, const LatticeVector& mu, const Rational& c = Rational(1));
void check_derivation(const DerivationSpec& d);

/// Image of a single monomial f_l under a (possibly nonstandard) linear rule.
using MonomialRule = std::function<AlgebraElement(const IntVector& weight)>;

/// The rule f_l -> c<rho,l> f_{l+mu}.
MonomialRule standard_rule(const DerivationSpec& d);

AlgebraElement apply_rule(const MonomialRule& rule, const AlgebraElement& a);
AlgebraElement apply_derivation(const DerivationSpec& d, const AlgebraElement& a);

/// Smallest k with d^k f_l = 0, found by iterating d.  Throws DomainError if <rho,l> < 0.
long nilpotency_order(const DerivationSpec& d, const LatticeVector& lambda);

/// Closed form: f_l (1 + c s f_mu)^<rho,l>, expanded binomially.
AlgebraElement exp_action(const DerivationSpec& d, const Rational& s, const AlgebraElement& a);

/// sum_k s^k/k! rule^k(a).  Stops at the first vanishing power; throws
/// DomainError if that does not happen within max_terms steps.
AlgebraElement exp_series(const MonomialRule& rule, const Rational& s, const AlgebraElement& a, long max_terms);
/// exp_series for the standard rule; every weight must pair nonnegatively with rho.
AlgebraElement exp_series(const DerivationSpec& d, const Rational& s, const AlgebraElement& a);

struct PropertyCheck {
  std::string property;  // "leibniz", "semi-invariance", "group-law", "closed-form"
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;
};

struct ContractReport {
  std::vector<PropertyCheck> checks;
  /// Set when the sample list was empty and every check passed vacuously.
  bool no_coverage = false;
  bool passed() const;
};

struct ContractOptions {
  /// (s, t) pairs for the group law; also the s values for the closed form.
  std::vector<std::pair<Rational, Rational>> parameters{
      {Rational(1), Rational(1)}, {Rational(1, 2), Rational(-1, 3)}, {Rational(-2), Rational(3, 5)}};
  /// Replaces the standard rule, e.g. to test that the harness detects a wrong derivation.
  std::optional<MonomialRule> rule;
};

/// Leibniz on all ordered sample pairs, semi-invariance of every sample term,
/// the group law and the closed form on every sample.
ContractReport check_contract(const DerivationSpec& d, const std::vector<AlgebraElement>& samples,
                              const ContractOptions& options = {});

}  // namespace horo

#endif  // HORO_LND_HPP
