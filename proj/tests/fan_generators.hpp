#pragma once

// Seeded random fans and the naive Demazure-root scan used as an oracle.

#include "horo/fan.hpp"
#include "test_support.hpp"

#include <random>

namespace horo::testing {

inline Cone ray_cone(const IntVector& v) { return cone_from_generators({v}, v.size()); }

inline std::vector<IntVector> random_primitive_vectors(std::mt19937_64& rng, Eigen::Index n, int count) {
  std::vector<IntVector> out;
  int guard = 0;
  while (static_cast<int>(out.size()) < count && guard++ < 1000) {
    IntVector v = random_vector(rng, n, -2, 2);
    if (is_zero(v)) continue;
    v = primitive(v);
    bool dup = false;
    for (const auto& w : out)
      if (equal(v, w)) dup = true;
    if (!dup) out.push_back(v);
  }
  return out;
}

// Complete fan over the faces of conv(points), when the points positively span.
inline std::optional<Fan> random_complete_fan(std::mt19937_64& rng, Eigen::Index n, int max_rays) {
  std::uniform_int_distribution<int> cnt(static_cast<int>(n) + 1, max_rays);
  const auto pts = random_primitive_vectors(rng, n, cnt(rng));
  if (!(cone_from_generators(pts, n) == Cone::whole_space(n))) return std::nullopt;
  std::vector<IntVector> lifted;
  for (const auto& p : pts) {
    IntVector q(n + 1);
    q.head(n) = p;
    q(n) = 1;
    lifted.push_back(q);
  }
  const Cone hull = cone_from_generators(lifted, n + 1);
  std::vector<Cone> maximal;
  for (const auto& f : hull.facets()) {
    std::vector<IntVector> gens;
    for (const auto& p : pts) {
      IntVector q(n + 1);
      q.head(n) = p;
      q(n) = 1;
      if (pair(f, q) == 0) gens.push_back(p);
    }
    maximal.push_back(cone_from_generators(gens, n));
  }
  auto v = validate_fan(maximal, n);
  if (!v.valid()) return std::nullopt;
  return v.fan;
}

// Greedy fan: random simplicial cones on a fixed ray pool, kept when compatible.
inline Fan random_partial_fan(std::mt19937_64& rng, Eigen::Index n, int max_rays) {
  std::uniform_int_distribution<int> cnt(1, max_rays);
  const auto pool = random_primitive_vectors(rng, n, cnt(rng));
  std::vector<Cone> chosen;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> size(1, static_cast<int>(n));
  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<IntVector> gens;
    const int k = size(rng);
    for (int i = 0; i < k; ++i) gens.push_back(pool[pick(rng)]);
    if (rank(gens, n) != static_cast<Eigen::Index>(gens.size())) continue;
    auto trial = chosen;
    trial.push_back(cone_from_generators(gens, n));
    if (validate_fan(trial, n).valid()) chosen = std::move(trial);
  }
  return *validate_fan(chosen, n).fan;
}

inline Fan some_complete_fan(std::mt19937_64& rng, Eigen::Index n, int max_rays) {
  for (;;)
    if (auto f = random_complete_fan(rng, n, max_rays)) return *f;
}

inline Fan random_fan(std::mt19937_64& rng, Eigen::Index n, int max_rays) {
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0)
    for (int tries = 0; tries < 20; ++tries)
      if (auto f = random_complete_fan(rng, n, max_rays)) return *f;
  return random_partial_fan(rng, n, max_rays);
}

// Demazure roots in [-b, b]^n by checking the three defining conditions point by point.
inline std::vector<std::pair<IntVector, IntVector>> naive_demazure_scan(const Fan& fan, long b) {
  const Eigen::Index n = fan.rank();
  std::vector<std::pair<IntVector, IntVector>> out;
  IntVector mu = IntVector::Constant(n, Integer(-b));
  for (;;) {
    for (const auto& rho : fan.rays()) {
      if (pair(rho, mu) != -1) continue;
      bool ok = true;
      for (const auto& other : fan.rays())
        if (!equal(other, rho) && pair(other, mu) < 0) ok = false;
      for (const auto& c : fan.cones()) {
        if (!ok) break;
        bool vanishes = true;
        for (const auto& g : c.rays())
          if (pair(g, mu) != 0) vanishes = false;
        if (!vanishes) continue;
        auto gens = c.rays();
        gens.push_back(rho);
        const Cone joined = cone_from_generators(gens, n);
        bool member = false;
        for (const auto& d : fan.cones())
          if (d == joined) member = true;
        ok = member;
      }
      if (ok) out.emplace_back(rho, mu);
    }
    Eigen::Index i = n - 1;
    for (; i >= 0; --i) {
      if (mu(i) < b) {
        mu(i) += 1;
        break;
      }
      mu(i) = -b;
    }
    if (i < 0) break;
  }
  return out;
}

// Library result restricted to the same box, as (ray, root) pairs.
inline std::vector<std::pair<IntVector, IntVector>> library_demazure_in_box(const Fan& fan, long b) {
  std::vector<std::pair<IntVector, IntVector>> out;
  for (const auto& set : demazure_roots(fan, Integer(b)))
    for (const auto& mu : set.roots) {
      bool inside = true;
      for (Eigen::Index i = 0; i < mu.size(); ++i)
        if (abs(mu(i)) > b) inside = false;
      if (inside) out.emplace_back(set.ray, mu);
    }
  return out;
}

inline bool same_pairs(std::vector<std::pair<IntVector, IntVector>> a,
                       std::vector<std::pair<IntVector, IntVector>> b) {
  auto less = [](const auto& x, const auto& y) {
    const auto c = lex_compare(x.first, y.first);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return LexLess{}(x.second, y.second);
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!equal(a[i].first, b[i].first) || !equal(a[i].second, b[i].second)) return false;
  return true;
}

}  // namespace horo::testing
