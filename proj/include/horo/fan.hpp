// Fans of strictly convex cones and their Demazure roots.

#ifndef HORO_FAN_HPP
#define HORO_FAN_HPP

#include "horo/polyhedral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace horo {

struct FanValidation;

/// A finite face-closed collection of strictly convex cones in which any two
/// members meet in a common face.  Only validate_fan builds one.
class Fan {
public:
  Fan() = default;

  Eigen::Index rank() const { return rank_; }
  /// Every cone of the fan, sorted.
  const std::vector<Cone>& cones() const { return cones_; }
  /// Primitive generators of the one-dimensional cones, sorted.
  const std::vector<IntVector>& rays() const { return rays_; }
  /// Cones that are not a proper face of another member.
  std::vector<Cone> maximal_cones() const;

  bool contains_cone(const Cone& c) const;
  bool has_ray(const IntVector& rho) const;

private:
  friend FanValidation validate_fan(const std::vector<Cone>&, Eigen::Index, bool);
  Eigen::Index rank_ = 0;
  std::vector<Cone> cones_;
  std::vector<IntVector> rays_;
};

/// One violated axiom.  `axiom` is "convexity", "F1" or "F2"; `cones` holds
/// the witnessing cones (the offending cone, or the offending pair).
struct FanViolation {
  std::string axiom;
  std::string message;
  std::vector<Cone> cones;
};

struct FanValidation {
  std::optional<Fan> fan;
  std::vector<FanViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Check the fan axioms.  With close_faces the input is read as a list of
/// generating cones and closed under faces; without it the input must
/// already be face-closed and missing faces are reported under F1.
FanValidation validate_fan(const std::vector<Cone>& cones, Eigen::Index rank, bool close_faces = true);

/// validate_fan with face closure, throwing ModelError on any violation.
Fan make_fan(const std::vector<Cone>& maximal_cones, Eigen::Index rank);

/// True iff the support of the fan is all of N_Q.  Checked by requiring
/// full-dimensional maximal cones whose facets are each shared by exactly
/// two maximal cones.  In rank 0 the fan {0} is complete.
bool is_complete(const Fan& fan);

struct DemazureRootSet {
  IntVector ray;
  EnumerationStatus status = EnumerationStatus::BoundedComplete;
  std::vector<IntVector> roots;  // sorted
  Polyhedron defining_polyhedron;
};

/// {mu : <rho,mu> = -1, <rho',mu> >= 0 for the other rays rho'}
Polyhedron demazure_polyhedron(const Fan& fan, const IntVector& rho);

/// For each cone C of the fan with C in mu^perp, cone(C, rho) is in the fan.
bool satisfies_fan_condition(const Fan& fan, const IntVector& rho, const IntVector& mu);

/// Demazure roots at one ray.  An unbounded root set needs a box and is
/// returned clipped with status unbounded-truncated.
DemazureRootSet demazure_roots_at(const Fan& fan, const IntVector& rho,
                                  std::optional<Integer> box = std::nullopt);

/// One entry per ray, in ray order.
std::vector<DemazureRootSet> demazure_roots(const Fan& fan, std::optional<Integer> box = std::nullopt);

/// The ray at which mu is a Demazure root, if any.
std::optional<IntVector> is_demazure_root(const Fan& fan, const IntVector& mu);

}  // namespace horo

#endif  // HORO_FAN_HPP
