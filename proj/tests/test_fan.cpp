#include "horo/fan.hpp"
#include "fan_generators.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace horo;
using namespace horo::testing;

namespace {

IntVector e(Eigen::Index n, Eigen::Index i, long s = 1) { return IntVector(s * unit_vector(n, i)); }

Cone cone(std::initializer_list<IntVector> gens) {
  std::vector<IntVector> g(gens);
  return cone_from_generators(g, g.front().size());
}

Fan p2() {
  const IntVector e1 = e(2, 0), e2 = e(2, 1), e3 = make_vector({-1, -1});
  return make_fan({cone({e1, e2}), cone({e2, e3}), cone({e3, e1})}, 2);
}

Fan projective_space(Eigen::Index n) {
  std::vector<IntVector> rays;
  for (Eigen::Index i = 0; i < n; ++i) rays.push_back(e(n, i));
  rays.push_back(IntVector::Constant(n, Integer(-1)));
  std::vector<Cone> maximal;
  for (std::size_t skip = 0; skip < rays.size(); ++skip) {
    std::vector<IntVector> g;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (i != skip) g.push_back(rays[i]);
    maximal.push_back(cone_from_generators(g, n));
  }
  return make_fan(maximal, n);
}

Fan p1xp1() {
  return make_fan({cone({e(2, 0), e(2, 1)}), cone({e(2, 1), e(2, 0, -1)}), cone({e(2, 0, -1), e(2, 1, -1)}),
                   cone({e(2, 1, -1), e(2, 0)})},
                  2);
}

Fan three_quadrants() {
  return make_fan({cone({e(2, 0), e(2, 1)}), cone({e(2, 1), e(2, 0, -1)}), cone({e(2, 1, -1), e(2, 0)})}, 2);
}

std::size_t total_roots(const Fan& f) {
  std::size_t n = 0;
  for (const auto& s : demazure_roots(f)) n += s.roots.size();
  return n;
}

}  // namespace

TEST(ValidateFan, ProjectivePlane) {
  const auto v = validate_fan({cone({e(2, 0), e(2, 1)}), cone({e(2, 1), make_vector({-1, -1})}),
                               cone({make_vector({-1, -1}), e(2, 0)})},
                              2);
  ASSERT_TRUE(v.valid());
  EXPECT_EQ(v.fan->cones().size(), 7u);  // 1 + 3 + 3
  EXPECT_EQ(v.fan->rays(), (std::vector<IntVector>{make_vector({-1, -1}), make_vector({0, 1}), make_vector({1, 0})}));
}

TEST(ValidateFan, OverlapIsF2) {
  const auto v = validate_fan({cone({e(2, 0), e(2, 1)}), cone({e(2, 0), make_vector({1, 1})})}, 2);
  ASSERT_FALSE(v.valid());
  ASSERT_EQ(v.violations.size(), 1u);
  EXPECT_EQ(v.violations[0].axiom, "F2");
  EXPECT_EQ(v.violations[0].cones.size(), 2u);
}

TEST(ValidateFan, ZeroFan) {
  const auto v = validate_fan({Cone::zero(2)}, 2);
  ASSERT_TRUE(v.valid());
  EXPECT_TRUE(v.fan->rays().empty());
  EXPECT_EQ(v.fan->cones().size(), 1u);
}

TEST(ValidateFan, MissingFaceIsF1WithoutClosure) {
  const auto v = validate_fan({cone({e(2, 0), e(2, 1)}), Cone::zero(2), cone({e(2, 0)})}, 2, false);
  ASSERT_FALSE(v.valid());
  EXPECT_EQ(v.violations[0].axiom, "F1");
  EXPECT_TRUE(v.violations[0].cones[1] == cone({e(2, 1)}));
}

TEST(ValidateFan, LineIsRejected) {
  const auto v = validate_fan({cone({e(2, 0), e(2, 0, -1)})}, 2);
  ASSERT_FALSE(v.valid());
  EXPECT_EQ(v.violations[0].axiom, "convexity");
  EXPECT_THROW(validate_fan({cone({e(3, 0)})}, 2), DimensionError);
}

TEST(IsComplete, Examples) {
  EXPECT_TRUE(is_complete(p2()));
  EXPECT_FALSE(is_complete(make_fan({cone({e(2, 0), e(2, 1)})}, 2)));
  EXPECT_FALSE(is_complete(make_fan({Cone::zero(1)}, 1)));
  EXPECT_FALSE(is_complete(three_quadrants()));
  EXPECT_TRUE(is_complete(p1xp1()));
  EXPECT_TRUE(is_complete(make_fan({Cone::zero(0)}, 0)));
}

TEST(DemazureRoots, Examples) {
  const auto s = demazure_roots_at(p2(), e(2, 0));
  EXPECT_EQ(s.status, EnumerationStatus::BoundedComplete);
  EXPECT_EQ(s.roots, (std::vector<IntVector>{make_vector({-1, 0}), make_vector({-1, 1})}));

  const Fan a1 = make_fan({cone({make_vector({1})})}, 1);
  const auto r = demazure_roots_at(a1, make_vector({1}));
  EXPECT_EQ(r.roots, std::vector<IntVector>{make_vector({-1})});

  EXPECT_THROW(demazure_roots_at(p2(), make_vector({1, 1})), DomainError);
}

TEST(DemazureRoots, ConditionThreeRejectsInThreeQuadrants) {
  const IntVector rho = e(2, 0, -1), mu = e(2, 0);
  EXPECT_FALSE(satisfies_fan_condition(three_quadrants(), rho, mu));
  EXPECT_TRUE(satisfies_fan_condition(p1xp1(), rho, mu));
  EXPECT_FALSE(is_demazure_root(three_quadrants(), mu).has_value());
  ASSERT_TRUE(is_demazure_root(p1xp1(), mu).has_value());
  EXPECT_TRUE(equal(*is_demazure_root(p1xp1(), mu), rho));
}

TEST(DemazureRoots, Counts) {
  EXPECT_EQ(total_roots(p2()), 6u);
  EXPECT_EQ(total_roots(projective_space(1)), 2u);
  EXPECT_EQ(total_roots(projective_space(3)), 12u);
  const auto p1 = demazure_roots(projective_space(1));
  ASSERT_EQ(p1.size(), 2u);
  EXPECT_TRUE(equal(p1[0].ray, make_vector({-1})));
  EXPECT_EQ(p1[0].roots, std::vector<IntVector>{make_vector({1})});
  EXPECT_EQ(p1[1].roots, std::vector<IntVector>{make_vector({-1})});
  EXPECT_FALSE(is_demazure_root(p2(), make_vector({0, 0})).has_value());
}

TEST(DemazureRoots, UnboundedNeedsBox) {
  const Fan quad = make_fan({cone({e(2, 0), e(2, 1)})}, 2);
  EXPECT_THROW(demazure_roots_at(quad, e(2, 0)), UnboundedError);
  const auto s = demazure_roots_at(quad, e(2, 0), Integer(3));
  EXPECT_EQ(s.status, EnumerationStatus::UnboundedTruncated);
  EXPECT_EQ(s.roots.size(), 4u);  // (-1, 0..3)
}

TEST(DemazureRoots, RandomFanProperties) {
  auto rng = seeded_rng("DemazureRoots.RandomFan");
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index n = 1 + trial % 3;
    const Fan fan = random_fan(rng, n, 6);
    const bool complete = is_complete(fan);
    std::set<IntVector, LexLess> seen;
    for (const auto& rho : fan.rays()) {
      DemazureRootSet set;
      if (complete) {
        set = demazure_roots_at(fan, rho);
        EXPECT_EQ(set.status, EnumerationStatus::BoundedComplete);
      } else {
        set = demazure_roots_at(fan, rho, Integer(4));
      }
      for (const auto& mu : set.roots) {
        EXPECT_EQ(pair(rho, mu), -1);
        for (const auto& other : fan.rays())
          if (!equal(other, rho)) EXPECT_GE(pair(other, mu), 0);
        EXPECT_TRUE(seen.insert(mu).second) << "root listed at two rays";
      }
    }
    EXPECT_TRUE(same_pairs(library_demazure_in_box(fan, 4), naive_demazure_scan(fan, 4)));
  }
}

TEST(DemazureRoots, SingleConeConditionIsAutomatic) {
  auto rng = seeded_rng("DemazureRoots.SingleCone");
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index n = 1 + trial % 3;
    const auto gens = random_primitive_vectors(rng, n, 1 + trial % 4);
    const Cone c = cone_from_generators(gens, n);
    if (!c.is_strictly_convex()) continue;
    const Fan fan = make_fan({c}, n);
    for (const auto& rho : fan.rays()) {
      const auto filtered = demazure_roots_at(fan, rho, Integer(4));
      const auto raw = lattice_points(demazure_polyhedron(fan, rho), Integer(4));
      EXPECT_EQ(filtered.roots, raw.points) << c.str();
    }
  }
}
