// Shared helpers for randomized tests.
#pragma once

#include <random>

#include "chromahom/graph.hpp"

namespace chromahom::testutil {

inline std::mt19937_64 make_rng(unsigned long long seed) {
  return std::mt19937_64(seed);
}

inline SimpleGraph random_graph(std::mt19937_64& rng, int v, double p) {
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      if (u(rng) < p) e.push_back({i, j});
  return build_graph(v, std::move(e));
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace chromahom::testutil
