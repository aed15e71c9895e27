#include "horo/polyhedral.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace horo;
using horo::testing::random_vector;
using horo::testing::seeded_rng;

namespace {

using VecSet = std::set<IntVector, LexLess>;

VecSet as_set(const std::vector<IntVector>& vs) { return VecSet(vs.begin(), vs.end()); }

Cone quadrant(Eigen::Index n) {
  std::vector<IntVector> g;
  for (Eigen::Index i = 0; i < n; ++i) g.push_back(unit_vector(n, i));
  return cone_from_generators(g, n);
}

// Caratheodory: x lies in cone(gens) iff it is a nonnegative combination of some
// linearly independent subfamily.  Exhaustive over subsets, exact over Q.
bool caratheodory_contains(const std::vector<IntVector>& gens, const IntVector& x) {
  const Eigen::Index n = x.size();
  if (is_zero(x)) return true;
  const std::size_t m = gens.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    std::vector<IntVector> sub;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) sub.push_back(gens[i]);
    if (static_cast<Eigen::Index>(sub.size()) > n) continue;
    const auto k = static_cast<Eigen::Index>(sub.size());
    RatMatrix aug(n, k + 1);
    for (Eigen::Index j = 0; j < k; ++j) aug.col(j) = sub[j].cast<Rational>();
    aug.col(k) = x.cast<Rational>();
    std::vector<Eigen::Index> piv;
    const RatMatrix r = rref(aug, &piv);
    // need k independent columns and a consistent system
    if (static_cast<Eigen::Index>(piv.size()) != k || (k > 0 && piv.back() == k)) continue;
    bool nonneg = true;
    for (Eigen::Index i = 0; i < k; ++i)
      if (r(i, k) < 0) nonneg = false;
    if (nonneg) return true;
  }
  return false;
}

// Faces as ray-index sets, obtained by zeroing every subset of facet normals.
std::set<std::vector<std::size_t>> faces_by_facet_subsets(const Cone& c) {
  std::set<std::vector<std::size_t>> out;
  const auto& f = c.facets();
  const auto& r = c.rays();
  for (std::size_t mask = 0; mask < (std::size_t{1} << f.size()); ++mask) {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < r.size(); ++j) {
      bool on = true;
      for (std::size_t i = 0; i < f.size(); ++i)
        if ((mask >> i & 1) && pair(f[i], r[j]) != 0) on = false;
      if (on) keep.push_back(j);
    }
    out.insert(keep);
  }
  return out;
}

std::vector<std::size_t> ray_indices(const Cone& face, const Cone& c) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < c.rays().size(); ++j)
    if (face.contains(c.rays()[j])) idx.push_back(j);
  return idx;
}

// Irreducible elements of C ∩ Z^n among the lattice points in [-bound, bound]^n.
VecSet irreducible_oracle(const Cone& c, long bound) {
  const Eigen::Index n = c.ambient_dim();
  std::vector<IntVector> pts;
  IntVector x = IntVector::Constant(n, Integer(-bound));
  for (;;) {
    if (!is_zero(x) && c.contains(x)) pts.push_back(x);
    Eigen::Index i = 0;
    for (; i < n; ++i) {
      if (x(i) < bound) {
        x(i) += 1;
        break;
      }
      x(i) = -bound;
    }
    if (i == n) break;
  }
  VecSet out;
  for (const auto& p : pts) {
    bool reducible = false;
    for (const auto& q : pts)
      if (!equal(p, q) && c.contains(IntVector(p - q)) && !is_zero(IntVector(p - q))) {
        reducible = true;
        break;
      }
    if (!reducible) out.insert(p);
  }
  return out;
}

std::vector<IntVector> random_generators(std::mt19937_64& rng, Eigen::Index n, int count, long r) {
  std::vector<IntVector> g;
  for (int i = 0; i < count; ++i) {
    IntVector v = random_vector(rng, n, -r, r);
    if (!is_zero(v)) g.push_back(v);
  }
  return g;
}

}  // namespace

TEST(ConeFromGenerators, Examples) {
  const Cone q = cone_from_generators({make_vector({1, 0}), make_vector({0, 1})}, 2);
  EXPECT_EQ(as_set(q.facets()), as_set({make_vector({1, 0}), make_vector({0, 1})}));
  EXPECT_EQ(as_set(q.rays()), as_set({make_vector({1, 0}), make_vector({0, 1})}));

  const Cone r = cone_from_generators({make_vector({2, 0}), make_vector({1, 0})}, 2);
  ASSERT_EQ(r.rays().size(), 1u);
  EXPECT_TRUE(equal(r.rays()[0], make_vector({1, 0})));
  EXPECT_EQ(r.dim(), 1);

  const Cone c = cone_from_generators({make_vector({1, 0}), make_vector({1, 2})}, 2);
  EXPECT_EQ(as_set(c.facets()), as_set({make_vector({0, 1}), make_vector({2, -1})}));

  EXPECT_THROW(cone_from_generators({make_vector({1, 0}), make_vector({1, 0, 0})}, 2),
               DimensionError);
  EXPECT_TRUE(cone_from_generators({}, 3).is_zero());
}

TEST(ConeFromGenerators, RaysAreSortedPrimitive) {
  const Cone c = cone_from_generators(
      {make_vector({3, 3, 3}), make_vector({0, 2, 0}), make_vector({4, 0, 0}), make_vector({1, 1, 0})},
      3);
  for (std::size_t i = 0; i < c.rays().size(); ++i) {
    EXPECT_EQ(content(c.rays()[i]), 1);
    if (i > 0) EXPECT_TRUE(LexLess{}(c.rays()[i - 1], c.rays()[i]));
  }
  EXPECT_EQ(c.rays().size(), 3u);  // (1,1,0) is redundant
}

TEST(DualCone, Examples) {
  EXPECT_EQ(dual_cone(quadrant(2)), quadrant(2));
  EXPECT_EQ(dual_cone(Cone::zero(2)), Cone::whole_space(2));
  const Cone d = dual_cone(cone_from_generators({make_vector({1, 0}), make_vector({1, 2})}, 2));
  EXPECT_EQ(d, cone_from_generators({make_vector({0, 1}), make_vector({2, -1})}, 2));
}

TEST(DualCone, BidualityProperty) {
  auto rng = seeded_rng("DualCone.Biduality");
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index n = 1 + trial % 4;
    const auto gens = random_generators(rng, n, 1 + trial % 6, 4);
    const Cone c = cone_from_generators(gens, n);
    ASSERT_EQ(dual_cone(dual_cone(c)), c) << c.str();
  }
}

TEST(StrictConvexity, Examples) {
  EXPECT_TRUE(is_strictly_convex(quadrant(2)));
  EXPECT_FALSE(is_strictly_convex(cone_from_generators({make_vector({1, 0}), make_vector({-1, 0})}, 2)));
  const Cone plane = cone_from_generators(
      {make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, -1})}, 2);
  EXPECT_FALSE(is_strictly_convex(plane));
  EXPECT_EQ(plane, Cone::whole_space(2));
}

TEST(StrictConvexity, MatchesFullDimensionalDual) {
  auto rng = seeded_rng("StrictConvexity.Dual");
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 1 + trial % 4;
    const Cone c = cone_from_generators(random_generators(rng, n, 1 + trial % 6, 3), n);
    EXPECT_EQ(c.is_strictly_convex(), dual_cone(c).is_full_dimensional());
  }
}

TEST(VHConsistency, MembershipAgreesWithCaratheodory) {
  auto rng = seeded_rng("VHConsistency.Caratheodory");
  for (int trial = 0; trial < 150; ++trial) {
    const Eigen::Index n = 2 + trial % 3;
    const auto gens = random_generators(rng, n, 2 + trial % 5, 3);
    const Cone c = cone_from_generators(gens, n);
    for (const auto& g : gens) {
      ASSERT_TRUE(c.contains(g));
      for (const auto& q : c.facets()) EXPECT_GE(pair(q, g), 0);
    }
    for (int s = 0; s < 20; ++s) {
      const IntVector x = random_vector(rng, n, -4, 4);
      EXPECT_EQ(c.contains(x), caratheodory_contains(gens, x)) << c.str() << " x=" << to_string(x);
    }
  }
}

TEST(Faces, Examples) {
  const auto fq = faces(quadrant(2));
  EXPECT_EQ(fq.size(), 4u);
  EXPECT_FALSE(face_test(cone_from_generators({make_vector({1, 1})}, 2), quadrant(2)));
  EXPECT_TRUE(face_test(cone_from_generators({make_vector({1, 0})}, 2), quadrant(2)));
  EXPECT_TRUE(face_test(Cone::zero(2), quadrant(2)));

  const Cone square = cone_from_generators({make_vector({1, 1, 1}), make_vector({1, -1, 1}),
                                            make_vector({-1, 1, 1}), make_vector({-1, -1, 1})},
                                           3);
  EXPECT_EQ(faces(square).size(), 10u);
  EXPECT_EQ(faces_by_facet_subsets(square).size(), 10u);
}

TEST(Faces, QuadrantCounts) {
  for (Eigen::Index n = 0; n <= 5; ++n)
    EXPECT_EQ(faces(quadrant(n)).size(), std::size_t{1} << n) << "rank " << n;
}

TEST(Faces, AgreeWithFacetSubsetOracleAndAreClosed) {
  auto rng = seeded_rng("Faces.Oracle");
  for (int trial = 0; trial < 120; ++trial) {
    const Eigen::Index n = 2 + trial % 3;
    const Cone c = cone_from_generators(random_generators(rng, n, 2 + trial % 5, 3), n);
    const auto fs = faces(c);
    if (c.is_strictly_convex()) {
      std::set<std::vector<std::size_t>> got;
      for (const auto& f : fs) got.insert(ray_indices(f, c));
      EXPECT_EQ(got, faces_by_facet_subsets(c)) << c.str();
    }
    const std::set<Cone> all(fs.begin(), fs.end());
    EXPECT_EQ(all.size(), fs.size());
    for (const auto& f : fs) {
      EXPECT_TRUE(face_test(f, c));
      for (const auto& g : faces(f)) EXPECT_TRUE(all.count(g)) << "face of face missing";
      for (const auto& g : fs) EXPECT_TRUE(all.count(intersect(f, g))) << "intersection missing";
    }
  }
}

TEST(Membership, Examples) {
  const Cone q = quadrant(2);
  EXPECT_TRUE(q.contains(make_vector({3, 5})));
  EXPECT_TRUE(q.relative_interior_contains(make_vector({3, 5})));
  EXPECT_TRUE(q.contains(make_vector({1, 0})));
  EXPECT_FALSE(q.relative_interior_contains(make_vector({1, 0})));
  const Cone ray = cone_from_generators({make_vector({1, 2})}, 2);
  EXPECT_TRUE(ray.relative_interior_contains(make_vector({2, 4})));
  EXPECT_FALSE(ray.contains(make_vector({1, 1})));
  EXPECT_FALSE(ray.relative_interior_contains(make_vector({0, 0})));
  EXPECT_TRUE(Cone::zero(2).relative_interior_contains(make_vector({0, 0})));
}

TEST(Membership, RationalCovector) {
  RatVector v(2);
  v << Rational(1, 3), Rational(2, 3);
  const auto rc = RationalCovector::from(v);
  EXPECT_TRUE(cone_from_generators({make_vector({1, 2})}, 2).relative_interior_contains(rc));
}

TEST(Membership, InteriorPointIsRelativelyInterior) {
  auto rng = seeded_rng("Membership.InteriorPoint");
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 1 + trial % 4;
    const Cone c = cone_from_generators(random_generators(rng, n, 1 + trial % 6, 3), n);
    EXPECT_TRUE(c.relative_interior_contains(c.interior_point())) << c.str();
  }
}

TEST(Triangulate, CoversTheCone) {
  auto rng = seeded_rng("Triangulate.Covers");
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index n = 2 + trial % 2;
    const Cone c = cone_from_generators(random_generators(rng, n, 3 + trial % 4, 3), n);
    if (!c.is_strictly_convex()) continue;
    const auto simplices = triangulate(c);
    for (const auto& s : simplices) {
      EXPECT_EQ(rank(s, n), static_cast<Eigen::Index>(s.size()));
      EXPECT_EQ(static_cast<Eigen::Index>(s.size()), c.dim());
    }
    for (int k = 0; k < 20; ++k) {
      const IntVector x = random_vector(rng, n, -5, 5);
      if (!c.contains(x)) continue;
      bool covered = false;
      for (const auto& s : simplices)
        if (cone_from_generators(s, n).contains(x)) covered = true;
      EXPECT_TRUE(covered) << c.str() << " x=" << to_string(x);
    }
  }
}

TEST(HilbertBasis, Examples) {
  // dual of cone{(1,0),(1,2)}: the monoid {l : l1 >= 0, l1 + 2 l2 >= 0}
  const Cone c = cone_from_generators({make_vector({0, 1}), make_vector({2, -1})}, 2);
  EXPECT_EQ(as_set(hilbert_basis(c)),
            as_set({make_vector({0, 1}), make_vector({1, 0}), make_vector({2, -1})}));
  EXPECT_EQ(as_set(hilbert_basis(quadrant(3))),
            as_set({make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({0, 0, 1})}));
  EXPECT_EQ(as_set(hilbert_basis(Cone::whole_space(1))), as_set({make_vector({1}), make_vector({-1})}));
}

TEST(HilbertBasis, MatchesIrreducibleOracle) {
  auto rng = seeded_rng("HilbertBasis.Oracle");
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index n = 2 + trial % 2;
    const Cone c = cone_from_generators(random_generators(rng, n, 2 + trial % 3, 3), n);
    if (!c.is_strictly_convex() || c.is_zero()) continue;
    long bound = 0;
    for (const auto& r : c.rays())
      for (Eigen::Index i = 0; i < n; ++i) bound += abs(r(i)).convert_to<long>();
    if (bound > (n == 2 ? 16 : 7)) continue;
    EXPECT_EQ(as_set(hilbert_basis(c)), irreducible_oracle(c, bound)) << c.str();
  }
}

TEST(LatticePoints, Examples) {
  Polyhedron p{2, {{make_vector({0, 1}), 0}, {make_vector({-1, -1}), 0}}, {{make_vector({1, 0}), 1}}};
  const auto r = lattice_points(p);
  EXPECT_EQ(r.status, EnumerationStatus::BoundedComplete);
  EXPECT_EQ(r.points, (std::vector<IntVector>{make_vector({-1, 0}), make_vector({-1, 1})}));

  Polyhedron line{1, {}, {{make_vector({1}), 1}}};
  const auto r1 = lattice_points(line);
  EXPECT_EQ(r1.status, EnumerationStatus::BoundedComplete);
  EXPECT_EQ(r1.points, std::vector<IntVector>{make_vector({-1})});

  Polyhedron unb{2, {{make_vector({0, 1}), 0}}, {{make_vector({1, 0}), 1}}};
  EXPECT_THROW(lattice_points(unb), UnboundedError);
  const auto r2 = lattice_points(unb, Integer(3));
  EXPECT_EQ(r2.status, EnumerationStatus::UnboundedTruncated);
  EXPECT_EQ(r2.points.size(), 4u);

  Polyhedron empty{1, {{make_vector({1}), -1}, {make_vector({-1}), 0}}, {}};
  EXPECT_EQ(lattice_points(empty).status, EnumerationStatus::Empty);
  Polyhedron hole{1, {{make_vector({2}), -1}, {make_vector({-2}), 1}}, {}};  // x = 1/2
  const auto r3 = lattice_points(hole);
  EXPECT_EQ(r3.status, EnumerationStatus::BoundedComplete);
  EXPECT_TRUE(r3.points.empty());
}

TEST(LatticePoints, MatchesBoxScan) {
  auto rng = seeded_rng("LatticePoints.BoxScan");
  std::uniform_int_distribution<long> off(-4, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 1 + trial % 3;
    Polyhedron p{n, {}, {}};
    for (int k = 0; k < 2 + trial % 4; ++k)
      p.inequalities.push_back({random_vector(rng, n, -3, 3), Integer(off(rng))});
    if (trial % 5 == 0) p.equalities.push_back({random_vector(rng, n, -2, 2), Integer(off(rng) % 3)});
    const bool boxed = trial % 2 == 0;
    if (boxed)
      for (Eigen::Index i = 0; i < n; ++i) {
        p.inequalities.push_back({unit_vector(n, i), Integer(5)});
        p.inequalities.push_back({IntVector(-unit_vector(n, i)), Integer(5)});
      }
    const long scan = 7;
    std::vector<IntVector> expected;
    IntVector x = IntVector::Constant(n, Integer(-scan));
    for (;;) {
      if (p.contains(x)) expected.push_back(x);
      Eigen::Index i = 0;
      for (; i < n; ++i) {
        if (x(i) < scan) {
          x(i) += 1;
          break;
        }
        x(i) = -scan;
      }
      if (i == n) break;
    }
    std::sort(expected.begin(), expected.end(), LexLess{});
    LatticePointSet got;
    try {
      got = lattice_points(p, Integer(scan));
    } catch (const std::exception& e) {
      FAIL() << e.what();
    }
    if (got.status == EnumerationStatus::UnboundedTruncated) {
      EXPECT_EQ(got.points, expected);
      EXPECT_FALSE(boxed);
    } else {
      // bounded: everything lies in the scan window whenever the boxed variant is used
      if (boxed) EXPECT_EQ(got.points, expected);
      for (const auto& q : got.points) EXPECT_TRUE(p.contains(q));
      if (got.status == EnumerationStatus::Empty) EXPECT_TRUE(got.points.empty());
    }
  }
}
