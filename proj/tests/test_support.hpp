#pragma once

#include "horo/types.hpp"

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>

namespace horo::testing {

// Seeded generator for property tests. HORO_TEST_SEED overrides the per-test default,
// and the seed in use is always printed so a failure can be replayed.
inline std::mt19937_64 seeded_rng(const std::string& name) {
  std::uint64_t seed = std::hash<std::string>{}(name) & 0xffffffffu;
  if (const char* env = std::getenv("HORO_TEST_SEED")) seed = std::strtoull(env, nullptr, 10);
  std::cout << "[seed] " << name << " = " << seed << std::endl;
  return std::mt19937_64(seed);
}

template <class Rng>
IntMatrix random_matrix(Rng& rng, Eigen::Index m, Eigen::Index n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix a(m, n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = d(rng);
  return a;
}

template <class Rng>
IntVector random_vector(Rng& rng, Eigen::Index n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = d(rng);
  return v;
}

}  // namespace horo::testing
