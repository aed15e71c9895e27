#include "horo/polyhedral.hpp"

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <set>

namespace horo {

namespace {

using Bits = boost::dynamic_bitset<>;

struct DDRay {
  IntVector v;
  Bits zeros;
};

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

Integer floor_of(const Rational& q) { return floor_div(numerator(q), denominator(q)); }
Integer ceil_of(const Rational& q) { return ceil_div(numerator(q), denominator(q)); }

// a * x - b * y, made primitive
IntVector combine(const Integer& a, const IntVector& x, const Integer& b, const IntVector& y) {
  return primitive(IntVector(a * x - b * y));
}

void check_sizes(const std::vector<IntVector>& vs, Eigen::Index n, const char* what) {
  for (const auto& v : vs)
    if (v.size() != n)
      throw DimensionError(std::string(what) + ": expected rank " + std::to_string(n) + ", got " +
                           std::to_string(v.size()));
}

int compare_lists(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto c = lex_compare(a[i], b[i]);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less ? -1 : 1;
  }
  return 0;
}

std::vector<IntVector> with_negatives(const std::vector<IntVector>& vs) {
  std::vector<IntVector> out;
  for (const auto& v : vs) {
    out.push_back(v);
    out.push_back(IntVector(-v));
  }
  return out;
}

RatMatrix rational_inverse(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  RatMatrix aug(n, 2 * n);
  aug.leftCols(n) = m.cast<Rational>();
  aug.rightCols(n) = RatMatrix::Identity(n, n);
  return rref(aug).rightCols(n);
}

// Nonzero lattice points in the half-open parallelepiped of a simplicial cone.
std::vector<IntVector> parallelepiped_points(const std::vector<IntVector>& gens, Eigen::Index n) {
  const auto k = static_cast<Eigen::Index>(gens.size());
  const IntMatrix v = columns_matrix(gens, n);
  const IntMatrix sat = saturation_basis(v);
  IntMatrix w(k, k);
  for (Eigen::Index j = 0; j < k; ++j) w.col(j) = *lattice_coordinates(sat, v.col(j));
  const SmithDecomposition snf = smith_normal_form(w);
  const IntMatrix uinv = unimodular_inverse(snf.U);
  const RatMatrix winv = rational_inverse(w);
  const RatMatrix vq = v.cast<Rational>();

  std::vector<IntVector> out;
  IntVector a = IntVector::Zero(k);
  for (;;) {
    const RatVector t = winv * (uinv * a).cast<Rational>();
    RatVector frac(k);
    for (Eigen::Index i = 0; i < k; ++i) frac(i) = t(i) - Rational(floor_of(t(i)));
    const RatVector p = vq * frac;
    IntVector ip(n);
    for (Eigen::Index i = 0; i < n; ++i) ip(i) = numerator(p(i));
    if (!is_zero(ip)) out.push_back(ip);
    Eigen::Index i = 0;
    for (; i < k; ++i) {
      a(i) += 1;
      if (a(i) < snf.D(i, i)) break;
      a(i) = 0;
    }
    if (i == k) break;
  }
  return out;
}

}  // namespace

GeneratorSystem double_description(const std::vector<IntVector>& inequalities,
                                   const std::vector<IntVector>& equations, Eigen::Index dim) {
  check_sizes(inequalities, dim, "double_description");
  check_sizes(equations, dim, "double_description");

  struct Constraint {
    const IntVector* a;
    bool equation;
  };
  std::vector<Constraint> order;
  for (const auto& e : equations) order.push_back({&e, true});
  for (const auto& q : inequalities) order.push_back({&q, false});
  const std::size_t total = order.size();

  std::vector<IntVector> lin;
  for (Eigen::Index i = 0; i < dim; ++i) lin.push_back(unit_vector(dim, i));
  std::vector<DDRay> rays;

  for (std::size_t k = 0; k < total; ++k) {
    const IntVector& a = *order[k].a;
    const bool eq = order[k].equation;
    if (is_zero(a)) {
      for (auto& r : rays) r.zeros.set(k);
      continue;
    }

    auto pivot_it = std::find_if(lin.begin(), lin.end(),
                                 [&](const IntVector& l) { return pair(a, l) != 0; });
    if (pivot_it != lin.end()) {
      IntVector piv = *pivot_it;
      lin.erase(pivot_it);
      Integer ap = pair(a, piv);
      if (ap < 0) {
        piv = -piv;
        ap = -ap;
      }
      for (auto& l : lin) {
        const Integer al = pair(a, l);
        if (al != 0) l = combine(ap, l, al, piv);
      }
      for (auto& r : rays) {
        const Integer ar = pair(a, r.v);
        if (ar != 0) r.v = combine(ap, r.v, ar, piv);
        r.zeros.set(k);
      }
      if (!eq) {
        Bits z(total);
        for (std::size_t j = 0; j < k; ++j) z.set(j);
        rays.push_back({primitive(piv), std::move(z)});
      }
      continue;
    }

    std::vector<std::size_t> pos, neg;
    std::vector<DDRay> next;
    std::vector<Integer> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = pair(a, rays[i].v);
      if (val[i] > 0)
        pos.push_back(i);
      else if (val[i] < 0)
        neg.push_back(i);
      else {
        DDRay r = rays[i];
        r.zeros.set(k);
        next.push_back(std::move(r));
      }
    }
    if (!eq)
      for (auto i : pos) next.push_back(rays[i]);
    for (auto p : pos) {
      for (auto q : neg) {
        const Bits common = rays[p].zeros & rays[q].zeros;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t == p || t == q) continue;
          if (common.is_subset_of(rays[t].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        DDRay r{combine(val[p], rays[q].v, val[q], rays[p].v), common};
        r.zeros.set(k);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }

  GeneratorSystem out;
  out.lineality = subspace_basis(lin, dim);
  for (const auto& r : rays) out.rays.push_back(project_out(r.v, out.lineality));
  sort_unique(out.rays);
  return out;
}

Cone Cone::from_generators(const std::vector<IntVector>& generators, Eigen::Index ambient_dim) {
  check_sizes(generators, ambient_dim, "cone_from_generators");
  Cone c;
  c.ambient_dim_ = ambient_dim;
  GeneratorSystem dual = double_description(generators, {}, ambient_dim);
  c.equations_ = std::move(dual.lineality);
  c.facets_ = std::move(dual.rays);
  GeneratorSystem primal = double_description(c.facets_, c.equations_, ambient_dim);
  c.lineality_ = std::move(primal.lineality);
  c.rays_ = std::move(primal.rays);
  return c;
}

Cone Cone::from_inequalities(const std::vector<IntVector>& inequalities,
                             const std::vector<IntVector>& equations, Eigen::Index ambient_dim) {
  const GeneratorSystem g = double_description(inequalities, equations, ambient_dim);
  std::vector<IntVector> gens = g.rays;
  for (const auto& l : with_negatives(g.lineality)) gens.push_back(l);
  return from_generators(gens, ambient_dim);
}

Cone Cone::zero(Eigen::Index ambient_dim) { return from_generators({}, ambient_dim); }

Cone Cone::whole_space(Eigen::Index ambient_dim) {
  std::vector<IntVector> gens;
  for (Eigen::Index i = 0; i < ambient_dim; ++i) gens.push_back(unit_vector(ambient_dim, i));
  return from_generators(with_negatives(gens), ambient_dim);
}

std::vector<IntVector> Cone::generators() const {
  std::vector<IntVector> g = rays_;
  for (const auto& l : with_negatives(lineality_)) g.push_back(l);
  return g;
}

std::vector<IntVector> Cone::halfspaces() const {
  std::vector<IntVector> h = facets_;
  for (const auto& e : with_negatives(equations_)) h.push_back(e);
  return h;
}

bool Cone::contains(const IntVector& v) const {
  if (v.size() != ambient_dim_) throw DimensionError("Cone::contains: rank mismatch");
  for (const auto& e : equations_)
    if (pair(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (pair(f, v) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionError("Cone::contains: rank mismatch");
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Cone::relative_interior_contains(const IntVector& v) const {
  if (v.size() != ambient_dim_)
    throw DimensionError("Cone::relative_interior_contains: rank mismatch");
  for (const auto& e : equations_)
    if (pair(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (pair(f, v) <= 0) return false;
  return true;
}

IntVector Cone::interior_point() const {
  IntVector s = IntVector::Zero(ambient_dim_);
  for (const auto& r : rays_) s += r;
  for (const auto& l : lineality_) s += l;
  return s;
}

std::string Cone::str() const {
  std::string s = "cone{";
  const auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ",";
    s += to_string(gens[i]);
  }
  return s + "}";
}

bool operator==(const Cone& a, const Cone& b) { return (a <=> b) == std::strong_ordering::equal; }

std::strong_ordering operator<=>(const Cone& a, const Cone& b) {
  if (a.ambient_dim_ != b.ambient_dim_) return a.ambient_dim_ <=> b.ambient_dim_;
  // higher-dimensional cones have fewer equations; order by dimension first
  if (a.equations_.size() != b.equations_.size()) return b.equations_.size() <=> a.equations_.size();
  if (int c = compare_lists(a.equations_, b.equations_); c != 0)
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int c = compare_lists(a.facets_, b.facets_); c != 0)
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Cone dual_cone(const Cone& c) { return Cone::from_generators(c.halfspaces(), c.ambient_dim()); }

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("intersect: rank mismatch");
  std::vector<IntVector> ineq = a.facets(), eq = a.equations();
  ineq.insert(ineq.end(), b.facets().begin(), b.facets().end());
  eq.insert(eq.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(ineq, eq, a.ambient_dim());
}

Cone extend(const Cone& c, const IntVector& v) {
  std::vector<IntVector> g = c.generators();
  g.push_back(v);
  return Cone::from_generators(g, c.ambient_dim());
}

namespace {

// Incidence-based face enumeration: a face is a closed set of facet indices.
struct FaceLattice {
  const Cone& cone;
  std::vector<Bits> ray_zero;  // per facet: which rays it vanishes on

  explicit FaceLattice(const Cone& c) : cone(c) {
    for (const auto& f : c.facets()) {
      Bits z(c.rays().size());
      for (std::size_t r = 0; r < c.rays().size(); ++r)
        if (pair(f, c.rays()[r]) == 0) z.set(r);
      ray_zero.push_back(std::move(z));
    }
  }

  Bits tight_rays(const Bits& facet_set) const {
    Bits t(cone.rays().size());
    t.set();
    for (std::size_t j = 0; j < ray_zero.size(); ++j)
      if (facet_set.test(j)) t &= ray_zero[j];
    return t;
  }

  Bits closure(const Bits& facet_set) const {
    const Bits t = tight_rays(facet_set);
    Bits c(ray_zero.size());
    for (std::size_t j = 0; j < ray_zero.size(); ++j)
      if (t.is_subset_of(ray_zero[j])) c.set(j);
    return c;
  }

  Cone face(const Bits& facet_set) const {
    const Bits t = tight_rays(facet_set);
    std::vector<IntVector> gens = with_negatives(cone.lineality());
    for (std::size_t r = 0; r < cone.rays().size(); ++r)
      if (t.test(r)) gens.push_back(cone.rays()[r]);
    return Cone::from_generators(gens, cone.ambient_dim());
  }
};

}  // namespace

bool face_test(const Cone& c0, const Cone& c) {
  if (c0.ambient_dim() != c.ambient_dim()) throw DimensionError("face_test: rank mismatch");
  if (!c.contains(c0)) return false;
  const FaceLattice lattice(c);
  Bits s(c.facets().size());
  const auto gens = c0.generators();
  for (std::size_t j = 0; j < c.facets().size(); ++j) {
    bool vanishes = true;
    for (const auto& g : gens)
      if (pair(c.facets()[j], g) != 0) {
        vanishes = false;
        break;
      }
    if (vanishes) s.set(j);
  }
  return lattice.face(s) == c0;
}

std::vector<Cone> faces(const Cone& c) {
  const FaceLattice lattice(c);
  const std::size_t m = c.facets().size();
  std::set<Bits> seen;
  std::vector<Bits> queue{lattice.closure(Bits(m))};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Bits s = queue[head];
    for (std::size_t j = 0; j < m; ++j) {
      if (s.test(j)) continue;
      Bits t = s;
      t.set(j);
      Bits closed = lattice.closure(t);
      if (seen.insert(closed).second) queue.push_back(std::move(closed));
    }
  }
  std::vector<Cone> out;
  for (const auto& s : queue) out.push_back(lattice.face(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cone> facet_cones(const Cone& c) {
  const FaceLattice lattice(c);
  std::vector<Cone> out;
  for (std::size_t j = 0; j < c.facets().size(); ++j) {
    Bits s(c.facets().size());
    s.set(j);
    out.push_back(lattice.face(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<IntVector>> triangulate(const Cone& c) {
  if (!c.is_strictly_convex()) throw DomainError("triangulate: cone is not strictly convex");
  if (static_cast<Eigen::Index>(c.rays().size()) == c.dim()) return {c.rays()};
  const IntVector& apex = c.rays().front();
  std::vector<std::vector<IntVector>> out;
  for (const Cone& f : facet_cones(c)) {
    if (f.contains(apex)) continue;
    for (auto simplex : triangulate(f)) {
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

std::vector<IntVector> hilbert_basis(const Cone& c) {
  const Eigen::Index n = c.ambient_dim();
  if (!c.is_strictly_convex()) {
    const auto l = static_cast<Eigen::Index>(c.lineality().size());
    const SmithDecomposition snf = smith_normal_form(columns_matrix(c.lineality(), n));
    const IntMatrix uinv = unimodular_inverse(snf.U);
    std::vector<IntVector> projected;
    for (const auto& r : c.rays()) projected.push_back(IntVector(snf.U * r).tail(n - l));
    std::vector<IntVector> out;
    for (Eigen::Index i = 0; i < l; ++i) {
      out.push_back(uinv.col(i));
      out.push_back(IntVector(-uinv.col(i)));
    }
    for (const auto& h : hilbert_basis(Cone::from_generators(projected, n - l))) {
      IntVector y = IntVector::Zero(n);
      y.tail(n - l) = h;
      out.push_back(uinv * y);
    }
    sort_unique(out);
    return out;
  }
  if (c.is_zero()) return {};

  std::vector<IntVector> candidates;
  for (const auto& simplex : triangulate(c)) {
    for (const auto& g : simplex) candidates.push_back(g);
    for (auto& p : parallelepiped_points(simplex, n)) candidates.push_back(std::move(p));
  }
  sort_unique(candidates);
  std::vector<IntVector> out;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& y : candidates) {
      if (equal(x, y)) continue;
      if (c.contains(IntVector(x - y))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(x);
  }
  return out;
}

bool Polyhedron::contains(const IntVector& x) const {
  if (x.size() != dim) throw DimensionError("Polyhedron::contains: rank mismatch");
  for (const auto& q : inequalities)
    if (pair(q.normal, x) + q.offset < 0) return false;
  for (const auto& e : equalities)
    if (pair(e.normal, x) + e.offset != 0) return false;
  return true;
}

Cone Polyhedron::recession_cone() const {
  std::vector<IntVector> ineq, eq;
  for (const auto& q : inequalities) ineq.push_back(q.normal);
  for (const auto& e : equalities) eq.push_back(e.normal);
  return Cone::from_inequalities(ineq, eq, dim);
}

std::string to_string(EnumerationStatus s) {
  switch (s) {
    case EnumerationStatus::BoundedComplete:
      return "bounded-complete";
    case EnumerationStatus::UnboundedTruncated:
      return "unbounded-truncated";
    case EnumerationStatus::Empty:
      return "empty";
  }
  return "unknown";
}

namespace {

GeneratorSystem homogenize(const Polyhedron& p) {
  const Eigen::Index n = p.dim;
  std::vector<IntVector> ineq, eq;
  auto lift = [n](const AffineForm& f) {
    IntVector v(n + 1);
    v.head(n) = f.normal;
    v(n) = f.offset;
    return v;
  };
  for (const auto& q : p.inequalities) {
    if (q.normal.size() != n) throw DimensionError("Polyhedron: rank mismatch");
    ineq.push_back(lift(q));
  }
  for (const auto& e : p.equalities) {
    if (e.normal.size() != n) throw DimensionError("Polyhedron: rank mismatch");
    eq.push_back(lift(e));
  }
  ineq.push_back(unit_vector(n + 1, n));
  return double_description(ineq, eq, n + 1);
}

void enumerate_box(const Polyhedron& p, const std::vector<Integer>& lo,
                   const std::vector<Integer>& hi, std::vector<IntVector>& out) {
  const Eigen::Index n = p.dim;
  if (n == 0) {
    if (p.contains(IntVector(0))) out.emplace_back(0);
    return;
  }
  for (Eigen::Index i = 0; i < n; ++i)
    if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)]) return;
  const Eigen::Index last = n - 1;
  IntVector x(n);
  for (Eigen::Index i = 0; i < last; ++i) x(i) = lo[static_cast<std::size_t>(i)];
  for (;;) {
    Integer a = lo[static_cast<std::size_t>(last)], b = hi[static_cast<std::size_t>(last)];
    bool feasible = true;
    auto partial = [&](const AffineForm& f) {
      Integer s = f.offset;
      for (Eigen::Index i = 0; i < last; ++i) s += f.normal(i) * x(i);
      return s;
    };
    for (const auto& q : p.inequalities) {
      const Integer s = partial(q);
      const Integer& c = q.normal(last);
      if (c > 0)
        a = std::max(a, ceil_div(-s, c));
      else if (c < 0)
        b = std::min(b, floor_div(s, -c));
      else if (s < 0)
        feasible = false;
    }
    for (const auto& e : p.equalities) {
      const Integer s = partial(e);
      const Integer& c = e.normal(last);
      if (c == 0) {
        if (s != 0) feasible = false;
      } else if (s % c != 0) {
        feasible = false;
      } else {
        const Integer v = -s / c;
        a = std::max(a, v);
        b = std::min(b, v);
      }
    }
    if (feasible)
      for (Integer v = a; v <= b; ++v) {
        x(last) = v;
        out.push_back(x);
      }
    Eigen::Index i = 0;
    for (; i < last; ++i) {
      x(i) += 1;
      if (x(i) <= hi[static_cast<std::size_t>(i)]) break;
      x(i) = lo[static_cast<std::size_t>(i)];
    }
    if (i == last) break;
  }
}

}  // namespace

LatticePointSet lattice_points(const Polyhedron& p, std::optional<Integer> box) {
  const Eigen::Index n = p.dim;
  GeneratorSystem h = homogenize(p);
  auto has_vertex = [n](const GeneratorSystem& g) {
    return std::any_of(g.rays.begin(), g.rays.end(), [n](const IntVector& r) { return r(n) > 0; });
  };
  if (!has_vertex(h)) return {EnumerationStatus::Empty, {}};

  const bool bounded = h.lineality.empty() &&
                       std::all_of(h.rays.begin(), h.rays.end(),
                                   [n](const IntVector& r) { return r(n) > 0; });
  LatticePointSet result;
  result.status = EnumerationStatus::BoundedComplete;
  Polyhedron clipped = p;
  if (!bounded) {
    if (!box)
      throw UnboundedError("lattice_points: polyhedron is unbounded (recession cone " +
                           p.recession_cone().str() + ") and no enumeration box was given");
    if (*box < 0) throw DomainError("lattice_points: box must be nonnegative");
    for (Eigen::Index i = 0; i < n; ++i) {
      clipped.inequalities.push_back({unit_vector(n, i), *box});
      clipped.inequalities.push_back({IntVector(-unit_vector(n, i)), *box});
    }
    result.status = EnumerationStatus::UnboundedTruncated;
    h = homogenize(clipped);
    if (!has_vertex(h)) return result;
  }

  // every homogenized ray is now a vertex; bound each coordinate by their range
  std::vector<Integer> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    Rational mn(h.rays.front()(i), h.rays.front()(n)), mx = mn;
    for (const auto& r : h.rays) {
      const Rational coord(r(i), r(n));
      mn = std::min(mn, coord);
      mx = std::max(mx, coord);
    }
    lo[static_cast<std::size_t>(i)] = ceil_of(mn);
    hi[static_cast<std::size_t>(i)] = floor_of(mx);
  }
  enumerate_box(clipped, lo, hi, result.points);
  std::sort(result.points.begin(), result.points.end(), LexLess{});
  return result;
}

}  // namespace horo
