// Spherical models given combinatorially: the weight lattice M inside X(T),
// colors and G-stable divisors with their kappa values in N = Hom(M, Z),
// the valuation cone, and colored cones and fans over them.

#ifndef HORO_SPHERICAL_FAN_HPP
#define HORO_SPHERICAL_FAN_HPP

#include "horo/fan.hpp"
#include "horo/root_datum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace horo {

enum class ColorType { U, T, N };
std::string to_string(ColorType t);
ColorType color_type_from_string(const std::string& s);

struct Color {
  std::string name;
  IntVector kappa;
  ColorType type = ColorType::U;
};

struct GDivisor {
  std::string name;
  IntVector kappa;
};

struct SphericalModel {
  RootDatum root_datum;
  /// Basis of M, as vectors of X(T).
  std::vector<LatticeVector> m_basis;
  std::vector<Color> colors;
  std::vector<GDivisor> g_divisors;
  bool horospherical = true;
  /// Valuation cone in N_Q; all of N_Q for horospherical models.
  Cone valuation_cone;

  /// rank of M (and of N)
  Eigen::Index rank() const { return static_cast<Eigen::Index>(m_basis.size()); }
  const Color& color(const std::string& name) const;
  /// The character of X(T) with the given M-coordinates.
  LatticeVector to_character(const IntVector& m) const;
  /// M-coordinates of a character, if it lies in M.
  std::optional<IntVector> to_m_coordinates(const LatticeVector& chi) const;
  /// Dominance of the character with the given M-coordinates.
  bool is_dominant_m(const IntVector& m) const;
};

/// Check the model's internal consistency; throws ModelError.
void validate_model(const SphericalModel& model);

/// Convenience constructor for horospherical models (valuation cone = N_Q).
SphericalModel make_horospherical_model(RootDatum rd, std::vector<LatticeVector> m_basis, std::vector<Color> colors,
                                        std::vector<GDivisor> g_divisors);

struct ColoredCone {
  Cone cone;
  std::vector<std::string> colors;  // sorted, unique

  ColoredCone() = default;
  ColoredCone(Cone c, std::vector<std::string> f);

  std::string str() const;
  friend bool operator==(const ColoredCone& a, const ColoredCone& b) = default;
  friend std::strong_ordering operator<=>(const ColoredCone& a, const ColoredCone& b);
};

/// Axiom labels: "CC1", "CC2", "SCC", "F1", "F2", "CF2", "convexity".
struct ColoredViolation {
  std::string axiom;
  std::string message;
  std::vector<ColoredCone> cones;
  std::optional<IntVector> witness;
};

/// Checks CC1 and CC2, and SCC when strict.  Unknown colors throw ModelError.
std::vector<ColoredViolation> validate_colored_cone(const SphericalModel& model, const ColoredCone& cc,
                                                    bool strict = true);

/// True iff the relative interior of c meets the valuation cone.
bool meets_valuation_cone(const SphericalModel& model, const Cone& c);

/// Pairs (C0, F0) with C0 a face of C whose relative interior meets the
/// valuation cone and F0 the colors of F with kappa in C0.  Sorted.
std::vector<ColoredCone> colored_faces(const SphericalModel& model, const ColoredCone& cc);

struct ColoredFan {
  std::vector<ColoredCone> cones;  // sorted, closed under colored faces
  Eigen::Index rank = 0;

  /// Cones of dimension one, as (primitive ray, colored cone).
  std::vector<std::pair<IntVector, const ColoredCone*>> ray_cones() const;
  std::vector<Cone> underlying_cones() const;
};

struct ColoredFanValidation {
  std::optional<ColoredFan> fan;
  std::vector<ColoredViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Validates each cone (strictly), closes under colored faces and checks CF2.
ColoredFanValidation validate_colored_fan(const SphericalModel& model, const std::vector<ColoredCone>& cones);

/// validate_colored_fan, throwing ModelError on any violation.
ColoredFan make_colored_fan(const SphericalModel& model, const std::vector<ColoredCone>& cones);

/// Hilbert basis, in M-coordinates, of { l in M : <kappa(D), l> >= 0 for every listed divisor }.
std::vector<IntVector> weight_monoid(const SphericalModel& model);

/// Fan of the section Z.  Without an excluded color: cones whose color set is
/// empty.  With one (of type T): cones whose color set is empty or exactly
/// that color.  The collection is checked, not repaired; faces are not added.
FanValidation fan_of_Z(const SphericalModel& model, const ColoredFan& cf,
                       const std::optional<std::string>& excluded_color = std::nullopt);

/// Completeness of a colored fan.  Implemented for horospherical models,
/// where it is the support test on the underlying fan; DomainError otherwise.
bool is_complete(const SphericalModel& model, const ColoredFan& cf);

/// Rays of the colored fan whose ray Q>=0 rho contains no kappa value of a
/// color of the fan (a color occurring in some cone of cf).
std::vector<IntVector> g_stable_rays(const SphericalModel& model, const ColoredFan& cf);

}  // namespace horo

#endif  // HORO_SPHERICAL_FAN_HPP
