#pragma once

// Deterministic random generators for property tests and the verify harness.

#include "eog/core.hpp"
#include "eog/matrixfwd.hpp"

#include <random>

namespace eog {

inline EdgeOrderedGraph random_eog(std::mt19937& rng, int max_n, int max_m) {
  int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  int cap = std::min<int>(max_m, static_cast<int>(pairs.size()));
  int m = cap == 0 ? 0 : std::uniform_int_distribution<int>(0, cap)(rng);
  pairs.resize(m);
  std::shuffle(pairs.begin(), pairs.end(), rng);  // ranks
  return EdgeOrderedGraph{n, std::move(pairs)};
}

inline EdgeOrderedGraph random_nonempty_eog(std::mt19937& rng, int max_n, int max_m) {
  for (;;) {
    EdgeOrderedGraph g = random_eog(rng, max_n, max_m);
    if (g.edge_count() > 0) return g;
  }
}

// Star forest with the given total edge budget; edge ranks shuffled.
inline EdgeOrderedGraph random_star_forest(std::mt19937& rng, int max_edges) {
  int m = std::uniform_int_distribution<int>(1, max_edges)(rng);
  std::vector<int> sizes;
  int left = m;
  while (left > 0) {
    int s = std::uniform_int_distribution<int>(1, left)(rng);
    sizes.push_back(s);
    left -= s;
  }
  std::vector<Edge> edges;
  int base = 0;
  for (int s : sizes) {
    for (int leaf = 1; leaf <= s; ++leaf) edges.push_back({base, base + leaf});
    base += s + 1;
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return EdgeOrderedGraph{base, std::move(edges)};
}

inline ZeroOnePattern random_matrix(std::mt19937& rng, int max_rows, int max_cols,
                                    double density) {
  int r = std::uniform_int_distribution<int>(1, max_rows)(rng);
  int c = std::uniform_int_distribution<int>(1, max_cols)(rng);
  std::bernoulli_distribution one(density);
  std::vector<std::pair<int, int>> ones;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (one(rng)) ones.push_back({i, j});
  return ZeroOnePattern{r, c, std::move(ones)};
}

}  // namespace eog
