// Exact integer linear algebra: pairings, primitive vectors, echelon and
// normal forms, sublattice membership.

#ifndef HORO_LATTICE_HPP
#define HORO_LATTICE_HPP

#include "horo/types.hpp"

#include <optional>
#include <vector>

namespace horo {

/// Natural pairing N x M -> Z.
Integer pair(const LatticeCovector& rho, const LatticeVector& mu);

/// Exact rational pairing, used for rational covectors.
template <typename Scalar>
Scalar dot(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  if (a.size() != b.size())
    throw DimensionError("dot: rank mismatch " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  Scalar s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

/// gcd of the absolute values of the coordinates (0 for the zero vector).
Integer content(const IntVector& v);

/// v / content(v).  Throws DomainError on the zero vector.
LatticeCovector primitive(const IntVector& v);

/// Smallest positive integer multiple of a rational vector; zero maps to zero.
IntVector clear_denominators(const RatVector& v);

/// Rational covector stored as integer numerator over a positive
/// denominator with gcd(numerator coords, denominator) = 1.
struct RationalCovector {
  IntVector numerator;
  Integer denominator{1};

  static RationalCovector from(const RatVector& v);
  RatVector value() const;
  friend bool operator==(const RationalCovector& a, const RationalCovector& b) {
    return a.denominator == b.denominator && equal(a.numerator, b.numerator);
  }
};

/// Stack vectors of length `rows` as the columns of a matrix.
IntMatrix columns_matrix(const std::vector<IntVector>& cols, Eigen::Index rows);
/// Stack vectors of length `cols` as the rows of a matrix.
IntMatrix rows_matrix(const std::vector<IntVector>& rows, Eigen::Index cols);

/// Reduced row echelon form over Q; returns pivot columns through `pivots`.
template <typename Scalar>
RatMatrix rref(const Matrix<Scalar>& a, std::vector<Eigen::Index>* pivots = nullptr) {
  RatMatrix m = a.template cast<Rational>();
  std::vector<Eigen::Index> piv;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r)
      if (m(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    m.row(row).swap(m.row(sel));
    const Rational inv = Rational(1) / m(row, col);
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

template <typename Scalar>
Eigen::Index rank(const Matrix<Scalar>& a) {
  std::vector<Eigen::Index> piv;
  rref(a, &piv);
  return static_cast<Eigen::Index>(piv.size());
}

/// Rank of a list of vectors of common length n.
Eigen::Index rank(const std::vector<IntVector>& vs, Eigen::Index n);

/// Canonical basis of {x : A x = 0}: primitive integer vectors, one per free column.
std::vector<IntVector> kernel_basis(const IntMatrix& a);

/// Canonical basis of span(vs): the nonzero rows of the RREF, each scaled
/// to a primitive integer vector.  Equal subspaces give equal bases.
std::vector<IntVector> subspace_basis(const std::vector<IntVector>& vs, Eigen::Index n);

/// Orthogonal projection of v onto the complement of span(basis), scaled
/// to a primitive integer vector (zero stays zero).
IntVector project_out(const IntVector& v, const std::vector<IntVector>& basis);

/// Bareiss fraction-free determinant.
Integer determinant(const IntMatrix& a);

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... , d_i >= 0.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  Eigen::Index rank() const;
};
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// H = U * A in row Hermite normal form: echelon, positive pivots, entries
/// above each pivot reduced into [0, pivot).
struct HermiteDecomposition {
  IntMatrix H;
  IntMatrix U;
};
HermiteDecomposition hermite_normal_form(const IntMatrix& a);

/// Some integer solution x of A x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// True iff v is an integer combination of the given vectors.
bool lattice_membership(const std::vector<LatticeVector>& basis, const LatticeVector& v);

/// Coordinates of v in a linearly independent family, if v lies in its Z-span.
std::optional<IntVector> lattice_coordinates(const IntMatrix& basis_columns, const IntVector& v);

/// Inverse of a unimodular matrix.  Throws DomainError if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& u);

/// Columns spanning the saturation Z^n ∩ span(cols) (a primitive sublattice).
IntMatrix saturation_basis(const IntMatrix& cols);

}  // namespace horo

#endif  // HORO_LATTICE_HPP
