// Root data of reductive groups given by Cartan type.
//
// The character lattice X(T) is realized as Z^(s+t): the first s coordinates
// are coefficients in the fundamental weights of the semisimple part, the
// last t are characters of the central torus.  The coroot of the i-th simple
// root is the i-th coordinate functional, so a weight is dominant exactly
// when its first s coordinates are nonnegative.

#ifndef HORO_ROOT_DATUM_HPP
#define HORO_ROOT_DATUM_HPP

#include "horo/lattice.hpp"

#include <functional>
#include <string>
#include <vector>

namespace horo {

struct RootDatum {
  std::string type_label;               // e.g. "A2 + torus 1"
  std::vector<std::string> components;  // simple factors, e.g. {"A1", "A1"}
  Eigen::Index semisimple_rank = 0;
  Eigen::Index torus_rank = 0;
  /// cartan(i, j) = <alpha_i, alpha_j^vee>
  IntMatrix cartan;
  std::vector<LatticeVector> simple_roots;
  std::vector<LatticeCovector> coroots;
  /// "a1", "a2", ... numbered across all simple factors
  std::vector<std::string> labels;

  Eigen::Index character_rank() const { return semisimple_rank + torus_rank; }
  /// Index of a simple root given as a label ("a2") or a 1-based number ("2").
  std::size_t simple_root_index(const std::string& name) const;
};

/// Parse "A2", "A1xA1", "B3 x G2 + torus 1", "torus 2", ...  Simple factors
/// use Bourbaki numbering.  Throws ModelError on an unknown type.
RootDatum build_root_datum(const std::string& type);
RootDatum build_root_datum(const std::string& type, Eigen::Index torus_rank);

bool is_dominant(const RootDatum& rd, const LatticeVector& mu);

/// Positive roots in X(T) coordinates, ordered by height then lexicographically
/// in simple-root coefficients.
std::vector<LatticeVector> positive_roots(const RootDatum& rd);
/// The same roots as coefficient vectors in the simple roots.
std::vector<IntVector> positive_root_coefficients(const RootDatum& rd);

/// Expresses a root lattice element in simple roots; nullopt if impossible.
std::optional<IntVector> simple_root_coordinates(const RootDatum& rd, const LatticeVector& beta);

struct ParabolicData {
  std::vector<std::size_t> levi;     // indices of Pi_L, sorted
  std::vector<LatticeVector> omega;  // highest weights of p_u, in positive-root order
};

/// Omega = { beta in Delta+ \ Delta_L : beta + gamma not a root for gamma in Pi_L }.
ParabolicData parabolic_omega(const RootDatum& rd, const std::vector<std::size_t>& levi);

struct OmegaMu {
  std::vector<LatticeVector> omega_mu;
  std::vector<LatticeVector> omega_mu0;
};

/// Omega_mu collects the alpha in Omega with mu - alpha in M (spanned by
/// m_basis inside X(T)); Omega_mu^0 keeps those for which gamma_z accepts
/// mu - alpha.
OmegaMu omega_mu(const ParabolicData& pd, const LatticeVector& mu, const std::vector<LatticeVector>& m_basis,
                 const std::function<bool(const LatticeVector&)>& gamma_z);

}  // namespace horo

#endif  // HORO_ROOT_DATUM_HPP
