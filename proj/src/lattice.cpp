#include "horo/lattice.hpp"

#include <utility>

namespace horo {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

// Full Smith reduction, additionally tracking the inverses of U and V.
struct SmithWork {
  IntMatrix D, U, Uinv, V, Vinv;
};

void swap_rows(SmithWork& w, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  w.D.row(i).swap(w.D.row(j));
  w.U.row(i).swap(w.U.row(j));
  w.Uinv.col(i).swap(w.Uinv.col(j));
}

void swap_cols(SmithWork& w, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  w.D.col(i).swap(w.D.col(j));
  w.V.col(i).swap(w.V.col(j));
  w.Vinv.row(i).swap(w.Vinv.row(j));
}

// row_i -= q * row_t
void add_row(SmithWork& w, Eigen::Index i, Eigen::Index t, const Integer& q) {
  if (q == 0) return;
  w.D.row(i) -= q * w.D.row(t);
  w.U.row(i) -= q * w.U.row(t);
  w.Uinv.col(t) += q * w.Uinv.col(i);
}

// col_j -= q * col_t
void add_col(SmithWork& w, Eigen::Index j, Eigen::Index t, const Integer& q) {
  if (q == 0) return;
  w.D.col(j) -= q * w.D.col(t);
  w.V.col(j) -= q * w.V.col(t);
  w.Vinv.row(t) += q * w.Vinv.row(j);
}

SmithWork smith_reduce(const IntMatrix& a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  SmithWork w{a, IntMatrix::Identity(m, m), IntMatrix::Identity(m, m),
              IntMatrix::Identity(n, n), IntMatrix::Identity(n, n)};
  IntMatrix& d = w.D;
  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    // pivot: smallest nonzero magnitude in the trailing block
    auto place_min = [&]() {
      Eigen::Index bi = -1, bj = -1;
      for (Eigen::Index i = t; i < m; ++i)
        for (Eigen::Index j = t; j < n; ++j)
          if (d(i, j) != 0 && (bi < 0 || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) return false;
      swap_rows(w, t, bi);
      swap_cols(w, t, bj);
      return true;
    };
    if (!place_min()) break;
    for (;;) {
      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        add_row(w, i, t, d(i, t) / d(t, t));
        if (d(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        add_col(w, j, t, d(t, j) / d(t, t));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        place_min();
        continue;
      }
      // enforce divisibility of the trailing block by the pivot
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      add_row(w, t, bad, Integer(-1));
    }
    if (d(t, t) < 0) {
      d.row(t) *= Integer(-1);
      w.U.row(t) *= Integer(-1);
      w.Uinv.col(t) *= Integer(-1);
    }
  }
  return w;
}

}  // namespace

Integer pair(const LatticeCovector& rho, const LatticeVector& mu) {
  if (rho.size() != mu.size())
    throw DimensionError("pair: rank mismatch " + std::to_string(rho.size()) + " vs " +
                         std::to_string(mu.size()));
  Integer s = 0;
  for (Eigen::Index i = 0; i < rho.size(); ++i) s += rho(i) * mu(i);
  return s;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, abs(v(i)));
  return g;
}

LatticeCovector primitive(const IntVector& v) {
  const Integer g = content(v);
  if (g == 0) throw DomainError("primitive: zero vector has no primitive multiple");
  IntVector r = v;
  for (Eigen::Index i = 0; i < r.size(); ++i) r(i) /= g;
  return r;
}

IntVector clear_denominators(const RatVector& v) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, denominator(v(i)));
  IntVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = numerator(v(i) * Rational(l));
  const Integer g = content(r);
  if (g > 1)
    for (Eigen::Index i = 0; i < r.size(); ++i) r(i) /= g;
  return r;
}

RationalCovector RationalCovector::from(const RatVector& v) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, boost::multiprecision::denominator(v(i)));
  IntVector num(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) num(i) = boost::multiprecision::numerator(v(i) * Rational(l));
  const Integer g = gcd(content(num), l);
  for (Eigen::Index i = 0; i < num.size(); ++i) num(i) /= g;
  return {num, l / g};
}

RatVector RationalCovector::value() const {
  RatVector r(numerator.size());
  for (Eigen::Index i = 0; i < r.size(); ++i) r(i) = Rational(numerator(i), denominator);
  return r;
}

IntMatrix columns_matrix(const std::vector<IntVector>& cols, Eigen::Index rows) {
  IntMatrix m(rows, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionError("columns_matrix: rank mismatch");
    m.col(static_cast<Eigen::Index>(j)) = cols[j];
  }
  return m;
}

IntMatrix rows_matrix(const std::vector<IntVector>& rows, Eigen::Index cols) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("rows_matrix: rank mismatch");
    m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return m;
}

Eigen::Index rank(const std::vector<IntVector>& vs, Eigen::Index n) {
  return rank(rows_matrix(vs, n));
}

std::vector<IntVector> kernel_basis(const IntMatrix& a) {
  std::vector<Eigen::Index> piv;
  const RatMatrix r = rref(a, &piv);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (auto p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<IntVector> basis;
  for (Eigen::Index f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    RatVector x = RatVector::Zero(a.cols());
    x(f) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i)
      x(piv[i]) = -r(static_cast<Eigen::Index>(i), f);
    basis.push_back(clear_denominators(x));
  }
  return basis;
}

std::vector<IntVector> subspace_basis(const std::vector<IntVector>& vs, Eigen::Index n) {
  std::vector<Eigen::Index> piv;
  const RatMatrix r = rref(rows_matrix(vs, n), &piv);
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < piv.size(); ++i)
    basis.push_back(clear_denominators(r.row(static_cast<Eigen::Index>(i)).transpose()));
  return basis;
}

IntVector project_out(const IntVector& v, const std::vector<IntVector>& basis) {
  if (basis.empty()) return is_zero(v) ? v : primitive(v);
  const RatMatrix b = rows_matrix(basis, v.size()).cast<Rational>();
  const RatVector rv = v.cast<Rational>();
  const auto k = b.rows();
  RatMatrix aug(k, k + 1);
  aug.leftCols(k) = b * b.transpose();
  aug.col(k) = b * rv;
  const RatMatrix red = rref(aug);
  const RatVector coeff = red.col(k);
  const RatVector proj = rv - b.transpose() * coeff;
  return clear_denominators(proj);
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant: matrix is not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1, prev = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index sel = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          sel = i;
          break;
        }
      if (sel < 0) return 0;
      m.row(k).swap(m.row(sel));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Eigen::Index SmithDecomposition::rank() const {
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) ++r;
  return r;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithWork w = smith_reduce(a);
  return {std::move(w.U), std::move(w.D), std::move(w.V)};
}

HermiteDecomposition hermite_normal_form(const IntMatrix& a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::Identity(m, m);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < m; ++col) {
    bool found = false;
    for (;;) {
      Eigen::Index sel = -1;
      for (Eigen::Index r = row; r < m; ++r)
        if (h(r, col) != 0 && (sel < 0 || abs(h(r, col)) < abs(h(sel, col)))) sel = r;
      if (sel < 0) break;
      found = true;
      h.row(row).swap(h.row(sel));
      u.row(row).swap(u.row(sel));
      bool more = false;
      for (Eigen::Index r = row + 1; r < m; ++r) {
        const Integer q = h(r, col) / h(row, col);
        if (q != 0) {
          h.row(r) -= q * h.row(row);
          u.row(r) -= q * u.row(row);
        }
        if (h(r, col) != 0) more = true;
      }
      if (!more) break;
    }
    if (!found) continue;
    if (h(row, col) < 0) {
      h.row(row) *= Integer(-1);
      u.row(row) *= Integer(-1);
    }
    for (Eigen::Index r = 0; r < row; ++r) {
      const Integer q = floor_div(h(r, col), h(row, col));
      if (q != 0) {
        h.row(r) -= q * h.row(row);
        u.row(r) -= q * u.row(row);
      }
    }
    ++row;
  }
  return {std::move(h), std::move(u)};
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (a.rows() != b.size()) throw DimensionError("solve_integer: rank mismatch");
  const SmithWork w = smith_reduce(a);
  const IntVector c = w.U * b;
  IntVector y = IntVector::Zero(a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const bool has_pivot = i < a.cols() && w.D(i, i) != 0;
    if (!has_pivot) {
      if (c(i) != 0) return std::nullopt;
      continue;
    }
    if (c(i) % w.D(i, i) != 0) return std::nullopt;
    y(i) = c(i) / w.D(i, i);
  }
  return IntVector(w.V * y);
}

bool lattice_membership(const std::vector<LatticeVector>& basis, const LatticeVector& v) {
  for (const auto& b : basis)
    if (b.size() != v.size()) throw DimensionError("lattice_membership: rank mismatch");
  return solve_integer(columns_matrix(basis, v.size()), v).has_value();
}

std::optional<IntVector> lattice_coordinates(const IntMatrix& basis_columns, const IntVector& v) {
  return solve_integer(basis_columns, v);
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  const Integer det = determinant(u);
  if (abs(det) != 1) throw DomainError("unimodular_inverse: determinant is " + det.str());
  const Eigen::Index n = u.rows();
  RatMatrix aug(n, 2 * n);
  aug.leftCols(n) = u.cast<Rational>();
  aug.rightCols(n) = RatMatrix::Identity(n, n);
  const RatMatrix r = rref(aug);
  IntMatrix inv(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = numerator(r(i, n + j));
  return inv;
}

IntMatrix saturation_basis(const IntMatrix& cols) {
  const SmithWork w = smith_reduce(cols);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < std::min(cols.rows(), cols.cols()); ++i)
    if (w.D(i, i) != 0) ++r;
  return w.Uinv.leftCols(r);
}

}  // namespace horo
