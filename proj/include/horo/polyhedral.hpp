// Rational polyhedral cones and polyhedra.
//
// A Cone carries both descriptions in canonical form:
//   V-side: a lineality basis (RREF-canonical) and primitive extreme rays
//           taken orthogonal to the lineality space;
//   H-side: an equation basis of C^perp (RREF-canonical) and primitive facet
//           normals taken inside span(C).
// Equality and ordering compare the H-side, so equal sets compare equal.

#ifndef HORO_POLYHEDRAL_HPP
#define HORO_POLYHEDRAL_HPP

#include "horo/lattice.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace horo {

/// Lineality basis plus extreme rays of {x : A x >= 0, E x = 0}.
struct GeneratorSystem {
  std::vector<IntVector> lineality;
  std::vector<IntVector> rays;
};

/// Double description with incremental lineality handling and the
/// combinatorial adjacency test.  Output is canonical.
GeneratorSystem double_description(const std::vector<IntVector>& inequalities,
                                   const std::vector<IntVector>& equations, Eigen::Index dim);

class Cone {
public:
  /// Zero cone in ambient dimension 0.
  Cone() = default;

  static Cone from_generators(const std::vector<IntVector>& generators, Eigen::Index ambient_dim);
  static Cone from_inequalities(const std::vector<IntVector>& inequalities,
                                const std::vector<IntVector>& equations, Eigen::Index ambient_dim);
  static Cone zero(Eigen::Index ambient_dim);
  static Cone whole_space(Eigen::Index ambient_dim);

  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Eigen::Index dim() const { return ambient_dim_ - static_cast<Eigen::Index>(equations_.size()); }

  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& lineality() const { return lineality_; }
  const std::vector<IntVector>& facets() const { return facets_; }
  const std::vector<IntVector>& equations() const { return equations_; }

  /// Minimal generating set: rays together with +/- each lineality vector.
  std::vector<IntVector> generators() const;
  /// Facet normals together with +/- each equation; C = {v : <v,q> >= 0}.
  std::vector<IntVector> halfspaces() const;

  bool is_strictly_convex() const { return lineality_.empty(); }
  bool is_full_dimensional() const { return equations_.empty(); }
  bool is_zero() const { return lineality_.empty() && rays_.empty(); }

  bool contains(const IntVector& v) const;
  bool contains(const RationalCovector& v) const { return contains(v.numerator); }
  bool contains(const Cone& other) const;
  bool relative_interior_contains(const IntVector& v) const;
  bool relative_interior_contains(const RationalCovector& v) const {
    return relative_interior_contains(v.numerator);
  }
  /// Sum of all rays and lineality vectors; lies in the relative interior.
  IntVector interior_point() const;

  std::string str() const;

  friend bool operator==(const Cone& a, const Cone& b);
  friend std::strong_ordering operator<=>(const Cone& a, const Cone& b);

private:
  Eigen::Index ambient_dim_ = 0;
  std::vector<IntVector> lineality_;
  std::vector<IntVector> rays_;
  std::vector<IntVector> equations_;
  std::vector<IntVector> facets_;
};

inline Cone cone_from_generators(const std::vector<IntVector>& gens, Eigen::Index ambient_dim) {
  return Cone::from_generators(gens, ambient_dim);
}

/// Dual cone in the dual space, built from the facet normals of C.
Cone dual_cone(const Cone& c);
inline bool is_strictly_convex(const Cone& c) { return c.is_strictly_convex(); }
Cone intersect(const Cone& a, const Cone& b);

/// Cone generated by c and one extra vector.
Cone extend(const Cone& c, const IntVector& v);

/// True iff c0 = {v in c : <v,q> = 0} for some q in the dual of c.
bool face_test(const Cone& c0, const Cone& c);
/// Every face, from {lineality} up to c itself, sorted.
std::vector<Cone> faces(const Cone& c);
/// Faces of codimension one.
std::vector<Cone> facet_cones(const Cone& c);

/// Simplicial subdivision of a strictly convex cone, as lists of rays.
std::vector<std::vector<IntVector>> triangulate(const Cone& c);

/// Minimal generating set of the monoid c ∩ Z^n.  For cones with lineality
/// the result contains +/- a basis of the lineality lattice together with
/// lifts of the Hilbert basis of the pointed quotient.  Sorted.
std::vector<IntVector> hilbert_basis(const Cone& c);

/// <normal, x> + offset
struct AffineForm {
  IntVector normal;
  Integer offset;
};

/// {x : <a_i,x> + c_i >= 0, <s_j,x> + d_j = 0}
struct Polyhedron {
  Eigen::Index dim = 0;
  std::vector<AffineForm> inequalities;
  std::vector<AffineForm> equalities;

  bool contains(const IntVector& x) const;
  Cone recession_cone() const;
};

enum class EnumerationStatus { BoundedComplete, UnboundedTruncated, Empty };
std::string to_string(EnumerationStatus s);

struct LatticePointSet {
  EnumerationStatus status = EnumerationStatus::Empty;
  std::vector<IntVector> points;  // lexicographically sorted
};

/// Lattice points of P.  Bounded polyhedra are enumerated completely
/// (the box is ignored); unbounded ones are clipped to [-box, box]^n and
/// flagged.  Throws UnboundedError if P is unbounded and no box is given.
LatticePointSet lattice_points(const Polyhedron& p, std::optional<Integer> box = std::nullopt);

}  // namespace horo

#endif  // HORO_POLYHEDRAL_HPP
