// Movability of G-stable divisors by B-root subgroups on horospherical
// varieties, and the local classification data of a candidate weight.
//
// Weights in reports are given both in M-coordinates and as characters of T.
// A divisor D is movable when some Demazure root mu at kappa(D), of the cone
// (simple case) or of the fan of the section Z (complete case), is dominant.
// The search enumerates the lattice points of the Demazure polyhedron cut by
// the dominance inequalities; when that region is unbounded it is clipped to
// the box, and an empty result is then reported as inconclusive.

#ifndef HORO_HOROSPHERICAL_HPP
#define HORO_HOROSPHERICAL_HPP

#include "horo/lnd.hpp"
#include "horo/spherical_fan.hpp"

namespace horo {

inline constexpr long kDefaultBox = 16;

enum class Movability { Movable, NotMovable, InconclusiveTruncated, NotApplicable };
std::string to_string(Movability m);

struct DivisorMovability {
  std::string divisor;
  IntVector kappa;
  Movability decision = Movability::NotApplicable;
  std::string note;  // reason for not-applicable, empty otherwise
  /// Lexicographically smallest dominant Demazure root found (M-coordinates).
  std::optional<IntVector> witness;
  std::optional<LatticeVector> witness_character;
  /// Status and members (within the box when truncated) of the full root set at kappa(D).
  EnumerationStatus root_set_status = EnumerationStatus::BoundedComplete;
  std::vector<IntVector> roots;
  /// Status of the search over the dominant part of the root set.
  EnumerationStatus dominant_search_status = EnumerationStatus::BoundedComplete;
  std::vector<IntVector> dominant_roots;
  Polyhedron defining_polyhedron;
};

struct MovabilityReport {
  Integer box = kDefaultBox;
  /// In the order the G-divisors are declared in the model.
  std::vector<DivisorMovability> divisors;
  bool any_inconclusive() const;
};

/// Simple horospherical variety with colored cone cc.
MovabilityReport movable_divisors_simple(const SphericalModel& model, const ColoredCone& cc,
                                         std::optional<Integer> box = std::nullopt);

/// Complete horospherical variety with colored fan cf (checked for
/// completeness; ModelError otherwise).  Roots are taken in the fan of Z.
MovabilityReport movable_divisors_complete(const SphericalModel& model, const ColoredFan& cf,
                                           std::optional<Integer> box = std::nullopt);

struct WeightClassification {
  LatticeVector mu;
  std::optional<IntVector> m_coordinates;  // present iff mu lies in M
  bool horizontal = false;
  std::optional<IntVector> moved_ray;
  std::vector<LatticeVector> omega_mu;
  std::vector<LatticeVector> omega_mu0;
  bool dominant = false;
};

/// Classification of mu in X(T) against the colored fan cf (or the simple
/// embedding of cc).  The fan of Z is the colorless part of cf, and Gamma_Z
/// is the set of weights of M pairing nonnegatively with all of its rays.
WeightClassification classify_weight(const SphericalModel& model, const ColoredFan& cf, const ParabolicData& parabolic,
                                     const LatticeVector& mu);
WeightClassification classify_weight(const SphericalModel& model, const ColoredCone& cc,
                                     const ParabolicData& parabolic, const LatticeVector& mu);

enum class LndMode { LambdaPlus, GammaO };
std::string to_string(LndMode m);
LndMode lnd_mode_from_string(const std::string& s);

/// Derivation data (rho, mu, 1) of the standard derivation on an affine
/// horospherical variety, mu given as a character.  E is the dual of the cone
/// spanned by the weight monoid, which is the cone spanned by all kappa values.
/// LambdaPlus requires mu dominant; GammaO additionally requires
/// <kappa(D), mu> >= 0 for every color D.  Throws DomainError on rejection.
DerivationSpec standard_lnd_affine(const SphericalModel& model, const LatticeVector& mu,
                                   LndMode mode = LndMode::LambdaPlus);

}  // namespace horo

#endif  // HORO_HOROSPHERICAL_HPP
