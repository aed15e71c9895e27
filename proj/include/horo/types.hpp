// Scalar and dense-container vocabulary shared by every module.
//
// All arithmetic is exact: lattice data lives in Eigen containers whose
// scalar is a GMP integer or rational.  Nothing in the library touches
// floating point.

#ifndef HORO_TYPES_HPP
#define HORO_TYPES_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace horo {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Integer>;
using IntMatrix = Matrix<Integer>;
using RatVector = Vector<Rational>;
using RatMatrix = Matrix<Rational>;

/// Element of the weight lattice M (or of the character lattice X(T)).
using LatticeVector = IntVector;
/// Element of the dual lattice N = Hom(M, Z).
using LatticeCovector = IntVector;

/// Raised when ranks or shapes of lattice data disagree.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when an enumeration would be infinite and no box was supplied.
class UnboundedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised for inconsistent combinatorial models (unknown colors, bad labels).
class ModelError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline IntVector make_vector(std::initializer_list<long> coords) {
  IntVector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (long c : coords) v(i++) = c;
  return v;
}

inline IntVector make_vector(const std::vector<Integer>& coords) {
  IntVector v(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) v(static_cast<Eigen::Index>(i)) = coords[i];
  return v;
}

inline IntVector zero_vector(Eigen::Index n) { return IntVector::Zero(n); }

inline IntVector unit_vector(Eigen::Index n, Eigen::Index i) {
  IntVector v = IntVector::Zero(n);
  v(i) = 1;
  return v;
}

/// Lexicographic three-way comparison; shorter vectors order first.
template <typename Scalar>
std::strong_ordering lex_compare(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return std::strong_ordering::less;
    if (b(i) < a(i)) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

template <typename Scalar>
bool equal(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  return lex_compare(a, b) == std::strong_ordering::equal;
}

struct LexLess {
  template <typename Scalar>
  bool operator()(const Vector<Scalar>& a, const Vector<Scalar>& b) const {
    return lex_compare(a, b) == std::strong_ordering::less;
  }
};

inline bool is_zero(const IntVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

template <typename Scalar>
std::string to_string(const Vector<Scalar>& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v(i).str();
  }
  return s + ")";
}

/// Sort and deduplicate a list of vectors lexicographically.
inline void sort_unique(std::vector<IntVector>& vs) {
  std::sort(vs.begin(), vs.end(), LexLess{});
  vs.erase(std::unique(vs.begin(), vs.end(),
                       [](const IntVector& a, const IntVector& b) { return equal(a, b); }),
           vs.end());
}

}  // namespace horo

#endif  // HORO_TYPES_HPP
