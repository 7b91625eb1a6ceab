#include "eog/bruteforce.hpp"
#include "eog/constructions.hpp"
#include "eog/containment.hpp"
#include "eog/orderchrom.hpp"

#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>
#include <set>

using namespace eog;

TEST_SUITE_BEGIN("constructions");

TEST_CASE("star plus matching") {
  for (int n = 1; n <= 8; ++n) {
    EdgeOrderedGraph g = star_plus_matching(n);
    CHECK(g.n == n);
    CHECK(g.edge_count() == 3 * (n - 1) / 2);
    CHECK(avoids_family(g, {path_pattern({1, 3, 2})}));
  }
  CHECK(star_plus_matching(2).edges == std::vector<Edge>{{0, 1}});
}

TEST_CASE("disjoint K_4 blocks") {
  for (int c = 1; c <= 3; ++c) {
    EdgeOrderedGraph g = disjoint_k4(c);
    CHECK(g.n == 4 * c);
    CHECK(g.edge_count() == 6 * c);
    CHECK(avoids_family(g, {path_pattern({1, 2, 3})}));
  }
}

TEST_CASE("recursive doubling graphs") {
  for (int i = 0; i <= 5; ++i) {
    EdgeOrderedGraph g = recursive_g(i);
    CHECK(g.n == (1 << i));
    CHECK(g.edge_count() == i * (1 << i) / 2);
    CHECK(!contains(g, path_pattern({1, 3, 4, 2})).has_value());
    EdgeOrderedGraph gp = recursive_g_prime(i);
    CHECK(gp.n == (1 << i));
    CHECK(gp.edge_count() == i * (1 << i) / 2);
    CHECK(!contains(gp, path_pattern({2, 1, 4, 3})).has_value());
  }
  CHECK(recursive_g(0).edge_count() == 0);
}

TEST_CASE("generalized avoidance of the doubling graphs") {
  // a pattern with no split into A,B with a top matching between them (and
  // A-edges below B-edges) cannot appear in recursive_g; mirrored condition
  // for the primed graphs with the matching ranked in the middle
  auto has_top_split = [](const EdgeOrderedGraph& h, bool matching_on_top) {
    int n = h.n;
    for (int mask = 1; mask + 1 < (1 << n); ++mask) {
      std::vector<int> side(n);
      for (int v = 0; v < n; ++v) side[v] = (mask >> v) & 1;
      std::vector<int> cross;  // rank indices of edges between A and B
      std::vector<int> within[2];
      bool is_matching = true;
      std::vector<int> deg(n, 0);
      for (int t = 0; t < h.edge_count(); ++t) {
        auto [u, v] = h.edges[t];
        if (side[u] != side[v]) {
          cross.push_back(t);
          if (++deg[u] > 1 || ++deg[v] > 1) is_matching = false;
        } else {
          within[side[u]].push_back(t);
        }
      }
      if (!is_matching) continue;
      auto below = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (int x : a)
          for (int y : b)
            if (x > y) return false;
        return true;
      };
      if (matching_on_top) {
        bool cross_top = below(within[0], cross) && below(within[1], cross);
        bool sides_ordered =
            below(within[0], within[1]) || below(within[1], within[0]);
        if (cross_top && sides_ordered) return true;
      } else {
        // matching ranked between the A-side and the B-side, either way round
        if (below(within[0], cross) && below(cross, within[1])) return true;
        if (below(within[1], cross) && below(cross, within[0])) return true;
      }
    }
    return false;
  };

  EdgeOrderedGraph g4 = recursive_g(4);
  EdgeOrderedGraph gp4 = recursive_g_prime(4);
  std::mt19937 rng(5150);
  int tested = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    int cap = std::min<size_t>(5, pairs.size());
    int m = 1 + static_cast<int>(rng() % cap);
    pairs.resize(m);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    EdgeOrderedGraph h{n, pairs};

    if (!has_top_split(h, true)) {
      ++tested;
      CHECK(!contains(g4, h).has_value());
    }
    bool connected = [&] {
      std::vector<int> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
      };
      int comps = n;
      for (auto [u, v] : h.edges)
        if (find(u) != find(v)) {
          parent[find(u)] = find(v);
          --comps;
        }
      return comps == 1;
    }();
    if (connected && !has_top_split(h, false)) CHECK(!contains(gp4, h).has_value());
  }
  CHECK(tested > 50);
}

TEST_CASE("rightright shape") {
  CHECK(rightright(1).graph.edge_count() == 1);
  CHECK(rightright(3).graph.n == 8);
  CHECK(rightright(3).graph.edge_count() == 8);
  CHECK(rightright(5).graph.n == 32);
  CHECK(rightright(5).graph.edge_count() == 48);
  for (int i = 1; i <= 5; ++i) {
    SidedPattern h = rightright(i);
    int lefts = 0;
    for (Side s : h.side) lefts += s == Side::Left;
    CHECK(lefts == h.graph.n / 2);
    CHECK(!side_contains(h, rooted_path({1, 3, 2}), Side::Right));
    CHECK(!side_contains(h, rooted_path({2, 1, 3}), Side::Right));
  }
}

TEST_CASE("d_graph") {
  EdgeOrderedGraph d4 = d_graph(4);
  CHECK(d4.n == 4);
  CHECK(d4.edge_count() == 5);
  CHECK(d4.edges ==
        std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  CHECK(d_graph(2).edges == std::vector<Edge>{{0, 1}});
  EdgeOrderedGraph d6 = d_graph(6);
  CHECK(d6.edge_count() == 9);
  for (CliqueKind kind : kAllCliqueKinds)
    CHECK(contains(canonical_clique(6, kind), d6).has_value());
}

TEST_CASE("k9 labeling data") {
  EdgeOrderedGraph k9 = k9_labeling();
  CHECK(k9.n == 9);
  CHECK(k9.edge_count() == 36);
  // ranks must cover 1..36 once; spot values from the source matrix
  std::set<Edge> all(k9.edges.begin(), k9.edges.end());
  CHECK(all.size() == 36);
  CHECK(k9.edges[0] == Edge{0, 1});    // rank 1
  CHECK(k9.edges[35] == Edge{0, 8});   // rank 36
  CHECK(k9.edges[4] == Edge{1, 6});    // rank 5 = entry (2,7)
  CHECK(k9.edges[31] == Edge{5, 6});   // rank 32 = entry (6,7)
  CHECK(k9.edges[15] == Edge{4, 8});   // rank 16 = entry (5,9)
}

TEST_CASE("explower order") {
  CHECK(explower_order(2).n == 1);
  CHECK(explower_order(3).n == 2);
  EdgeOrderedGraph e4 = explower_order(4);
  CHECK(e4.edges == std::vector<Edge>{{1, 2}, {0, 2}, {1, 3}, {0, 3}, {0, 1}, {2, 3}});
  CHECK(dialemma_check(e4, 4));
  EdgeOrderedGraph e5 = explower_order(5);
  CHECK(e5.n == 8);
  CHECK(e5.edge_count() == 28);
  CHECK(dialemma_check(e5, 5));
}

TEST_CASE("embedding the diamond family into canonical cliques") {
  for (int n = 2; n <= 8; ++n)
    for (CliqueKind kind : kAllCliqueKinds) {
      Embedding emb = embed_d_canonical(n, kind);
      CHECK(is_valid_embedding(canonical_clique(n, kind), d_graph(n), emb));
    }
}

TEST_CASE("turan witness") {
  EdgeOrderedGraph w = turan_witness(6, 2, {cycle_pattern({1, 2, 3, 4})});
  CHECK(w.n == 6);
  CHECK(w.edge_count() == 9);  // complete bipartite 3+3
  CHECK(avoids_family(w, {cycle_pattern({1, 2, 3, 4})}));
  CHECK(is_bipartite(underlying(w)));

  CHECK_THROWS_AS(turan_witness(4, 3, {path_pattern({1, 4, 3, 2, 5})}),
                  TuranWitnessError);
  CHECK_THROWS_AS(turan_witness(5, 2, {path_pattern({1})}), TuranWitnessError);
}

TEST_SUITE_END();
