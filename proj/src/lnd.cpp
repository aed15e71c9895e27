#include "horo/lnd.hpp"

#include <algorithm>

namespace horo {

namespace {

void require_rank(Eigen::Index expected, const IntVector& w, const char* where) {
  if (w.size() != expected)
    throw DimensionError(std::string(where) + ": weight " + to_string(w) + " has rank " + std::to_string(w.size()) +
                         ", expected " + std::to_string(expected));
}

}  // namespace

AlgebraElement AlgebraElement::monomial(const IntVector& weight, const Rational& coeff) {
  AlgebraElement a;
  a.add_term(weight, coeff);
  return a;
}

AlgebraElement AlgebraElement::from_terms(const std::vector<std::pair<IntVector, Rational>>& terms) {
  AlgebraElement a;
  for (const auto& [w, c] : terms) a.add_term(w, c);
  return a;
}

Rational AlgebraElement::coefficient(const IntVector& weight) const {
  const auto it = terms_.find(weight);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const IntVector& weight, const Rational& coeff) {
  if (!terms_.empty()) require_rank(rank(), weight, "AlgebraElement");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(weight, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  if (!a.is_zero() && !b.is_zero() && a.rank() != b.rank())
    throw DimensionError("AlgebraElement: product of elements of different rank");
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(IntVector(wa + wb), ca * cb);
  return out;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational mag = c;
    if (c < 0) {
      s += first ? "-" : " - ";
      mag = -c;
    } else if (!first) {
      s += " + ";
    }
    if (mag != 1) s += mag.str() + "*";
    s += "f" + to_string(w);
    first = false;
  }
  return s;
}

void check_derivation(const DerivationSpec& d) {
  if (d.rho.size() != d.mu.size()) throw DimensionError("derivation: rho and mu have different rank");
  if (pair(d.rho, d.mu) != -1)
    throw DomainError("derivation: <rho,mu> = " + pair(d.rho, d.mu).str() + ", expected -1");
  if (d.c == 0) throw DomainError("derivation: the constant c must be nonzero");
}

DerivationSpec make_derivation(const LatticeCovector& rho, const LatticeVector& mu, const Rational& c) {
  DerivationSpec d{rho, mu, c};
  check_derivation(d);
  return d;
}

MonomialRule standard_rule(const DerivationSpec& d) {
  return [d](const IntVector& w) {
    require_rank(d.rho.size(), w, "apply_derivation");
    return AlgebraElement::monomial(IntVector(w + d.mu), d.c * Rational(pair(d.rho, w)));
  };
}

AlgebraElement apply_rule(const MonomialRule& rule, const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [w, c] : a.terms()) out += rule(w) * c;
  return out;
}

AlgebraElement apply_derivation(const DerivationSpec& d, const AlgebraElement& a) {
  return apply_rule(standard_rule(d), a);
}

long nilpotency_order(const DerivationSpec& d, const LatticeVector& lambda) {
  require_rank(d.rho.size(), lambda, "nilpotency_order");
  const Integer p = pair(d.rho, lambda);
  if (p < 0) throw DomainError("nilpotency_order: <rho,lambda> = " + p.str() + " is negative; f_lambda is not in the domain");
  AlgebraElement cur = AlgebraElement::monomial(lambda);
  long k = 0;
  while (!cur.is_zero()) {
    cur = apply_derivation(d, cur);
    ++k;
  }
  return k;
}

AlgebraElement exp_action(const DerivationSpec& d, const Rational& s, const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [w, coeff] : a.terms()) {
    require_rank(d.rho.size(), w, "exp_action");
    const Integer p = pair(d.rho, w);
    if (p < 0) throw DomainError("exp_action: weight " + to_string(w) + " pairs negatively with rho");
    const long n = p.convert_to<long>();
    // f_w (1 + c s f_mu)^n = sum_k binom(n,k) (cs)^k f_{w+k mu}
    Integer binom = 1;
    Rational power = 1;
    IntVector shifted = w;
    for (long k = 0; k <= n; ++k) {
      out.add_term(shifted, coeff * Rational(binom) * power);
      binom = binom * (n - k) / (k + 1);
      power *= d.c * s;
      shifted += d.mu;
    }
  }
  return out;
}

AlgebraElement exp_series(const MonomialRule& rule, const Rational& s, const AlgebraElement& a, long max_terms) {
  AlgebraElement out;
  AlgebraElement power = a;  // rule^k(a)
  Rational scale = 1;        // s^k / k!
  for (long k = 0; !power.is_zero(); ++k) {
    if (k >= max_terms) throw DomainError("exp_series: derivation is not nilpotent on the element within " +
                                          std::to_string(max_terms) + " steps");
    out += power * scale;
    power = apply_rule(rule, power);
    scale = scale * s / Rational(k + 1);
  }
  return out;
}

AlgebraElement exp_series(const DerivationSpec& d, const Rational& s, const AlgebraElement& a) {
  long bound = 1;
  for (const auto& [w, c] : a.terms()) {
    require_rank(d.rho.size(), w, "exp_series");
    const Integer p = pair(d.rho, w);
    if (p < 0) throw DomainError("exp_series: weight " + to_string(w) + " pairs negatively with rho");
    bound = std::max(bound, p.convert_to<long>() + 2);
  }
  return exp_series(standard_rule(d), s, a, bound);
}

bool ContractReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed; });
}

ContractReport check_contract(const DerivationSpec& d, const std::vector<AlgebraElement>& samples,
                              const ContractOptions& options) {
  check_derivation(d);
  const MonomialRule rule = options.rule ? *options.rule : standard_rule(d);
  constexpr long kMaxTerms = 512;
  auto fail = [](PropertyCheck& pc, const std::string& what) {
    if (pc.passed) pc.counterexample = what;
    pc.passed = false;
  };

  PropertyCheck leibniz;
  leibniz.property = "leibniz";
  for (const auto& a : samples)
    for (const auto& b : samples) {
      ++leibniz.cases;
      const AlgebraElement lhs = apply_rule(rule, a * b);
      const AlgebraElement rhs = apply_rule(rule, a) * b + a * apply_rule(rule, b);
      if (!(lhs == rhs)) fail(leibniz, "(" + a.str() + ", " + b.str() + "): " + lhs.str() + " != " + rhs.str());
    }

  PropertyCheck semi;
  semi.property = "semi-invariance";
  for (const auto& a : samples)
    for (const auto& [w, c] : a.terms()) {
      ++semi.cases;
      const AlgebraElement image = rule(w);
      for (const auto& [img, ic] : image.terms())
        if (!equal(img, IntVector(w + d.mu)))
          fail(semi, "f" + to_string(w) + " has a component at weight " + to_string(img));
    }

  PropertyCheck group, closed;
  group.property = "group-law";
  closed.property = "closed-form";
  for (const auto& a : samples)
    for (const auto& [s, t] : options.parameters) {
      ++group.cases;
      ++closed.cases;
      try {
        const AlgebraElement lhs = exp_series(rule, s, exp_series(rule, t, a, kMaxTerms), kMaxTerms);
        const AlgebraElement rhs = exp_series(rule, s + t, a, kMaxTerms);
        if (!(lhs == rhs))
          fail(group, a.str() + " at s=" + s.str() + ", t=" + t.str() + ": " + lhs.str() + " != " + rhs.str());
      } catch (const DomainError& e) {
        fail(group, a.str() + ": " + e.what());
      }
      try {
        const AlgebraElement lhs = exp_action(d, s, a);
        const AlgebraElement rhs = exp_series(rule, s, a, kMaxTerms);
        if (!(lhs == rhs)) fail(closed, a.str() + " at s=" + s.str() + ": " + lhs.str() + " != " + rhs.str());
      } catch (const DomainError& e) {
        fail(closed, a.str() + ": " + e.what());
      }
    }

  ContractReport report;
  report.checks = {leibniz, semi, group, closed};
  report.no_coverage = samples.empty();
  return report;
}

}  // namespace horo
