#include "eog/bruteforce.hpp"
#include "eog/canonical.hpp"
#include "eog/constructions.hpp"
#include "eog/containment.hpp"
#include "eog/orderchrom.hpp"

#include <doctest.h>

#include <random>

using namespace eog;

TEST_SUITE_BEGIN("orderchrom");

TEST_CASE("is_chi_two") {
  for (auto perm : {std::vector<int>{1, 2, 3}, {1, 3, 2}, {2, 1, 3}})
    CHECK(is_chi_two(path_pattern(perm)));
  CHECK(!is_chi_two(cycle_pattern({1, 2, 3, 4})));
  CHECK(is_chi_two(path_pattern({1})));
  CHECK_THROWS_AS(is_chi_two(EdgeOrderedGraph{2, {}}), std::invalid_argument);
}

TEST_CASE("is_chi_infinite") {
  CHECK(is_chi_infinite({path_pattern({1, 4, 2, 3})}));
  CHECK(is_chi_infinite({path_pattern({2, 3, 1, 4})}));
  CHECK(!is_chi_infinite({path_pattern({1, 4, 2, 3}), path_pattern({2, 3, 1, 4})}));
  CHECK(!is_chi_infinite({path_pattern({1})}));
}

TEST_CASE("chi_exceeds on the non-principal pair") {
  Family pair = {path_pattern({1, 4, 2, 3}), path_pattern({2, 3, 1, 4})};
  CHECK(chi_exceeds(pair, 2) == Decision::True);
  CHECK(chi_exceeds(pair, 3) == Decision::False);
  CHECK(chi_exceeds({path_pattern({1})}, 2) == Decision::False);
  CHECK(chi_exceeds({path_pattern({1})}, 3) == Decision::False);
  CHECK(chi_exceeds(pair, 3, 50) == Decision::Budget);
}

TEST_CASE("order_chromatic") {
  Family pair = {path_pattern({1, 4, 2, 3}), path_pattern({2, 3, 1, 4})};
  CHECK(order_chromatic(pair, 3) == ChiResult::exactly(3));
  CHECK(order_chromatic({path_pattern({1, 2, 3})}, 2) == ChiResult::exactly(2));
  CHECK(order_chromatic({cycle_pattern({1, 2, 3, 4})}, 2) == ChiResult::infinite());
  CHECK(order_chromatic({path_pattern({1})}, 2) == ChiResult::exactly(2));
}

TEST_CASE("family monotonicity of chi_exceeds") {
  Family big = {path_pattern({1, 4, 2, 3}), path_pattern({2, 3, 1, 4})};
  // chi_exceeds(F) = true forces chi_exceeds(F') = true for subfamilies
  CHECK(chi_exceeds(big, 2) == Decision::True);
  CHECK(chi_exceeds({big[0]}, 2) == Decision::True);
  CHECK(chi_exceeds({big[1]}, 2) == Decision::True);
}

TEST_CASE("no canonical order of the 3x2 host avoids the pair") {
  Family pair = {path_pattern({1, 4, 2, 3}), path_pattern({2, 3, 1, 4})};
  auto stats =
      enumerate_canonical(3, 2, [&](const CanonicalSpec&, const EdgeOrderedGraph& g) {
        CHECK(!avoids_family(g, pair));
        return true;
      });
  CHECK(stats.small_n_warning);
  CHECK(stats.realized > 0);
}

TEST_CASE("close-class 2-coloring") {
  CHECK(has_close_class_2coloring(path_pattern({1, 3, 2})));
  // bipartite with an all-close side, yet not chi 2: the non-forest caveat
  EdgeOrderedGraph c1234 = cycle_pattern({1, 2, 3, 4});
  CHECK(has_close_class_2coloring(c1234));
  CHECK(!is_chi_two(c1234));
  CHECK(!has_close_class_2coloring(cycle_pattern({1, 2, 3})));
}

TEST_CASE("chi two implies the close-class condition; forests also conversely") {
  for (auto perm :
       {std::vector<int>{1, 2, 3, 4}, {1, 4, 2, 3}, {2, 3, 1, 4}, {1, 3, 2, 4}}) {
    EdgeOrderedGraph p = path_pattern(perm);
    if (is_chi_two(p)) CHECK(has_close_class_2coloring(p));
    CHECK(is_chi_two(p) == has_close_class_2coloring(p));  // paths are forests
  }
}

TEST_CASE("auxiliary graphs") {
  EdgeOrderedGraph e4 = explower_order(4);
  for (int x = 0; x < e4.n; ++x) {
    SimpleGraph gx = auxiliary_graph(e4, x);
    CHECK(is_bipartite(gx));
    // the two sides are the vertices below and above x
    for (auto [y, z] : gx.edges) CHECK(((y < x) != (z < x)));
  }
  EdgeOrderedGraph k3 = cycle_pattern({1, 2, 3});
  for (int x = 0; x < 3; ++x)
    CHECK(auxiliary_graph(k3, x).edges.size() <= 1);
  EdgeOrderedGraph k9 = k9_labeling();
  for (int x = 0; x < 9; ++x) CHECK(is_bipartite(auxiliary_graph(k9, x)));
  CHECK_THROWS_AS(auxiliary_graph(path_pattern({1, 2}), 0), std::invalid_argument);
}

TEST_CASE("dialemma certificate") {
  CHECK(dialemma_check(k9_labeling(), 4));
  CHECK(dialemma_check(explower_order(5), 5));
  CHECK(!dialemma_check(canonical_clique(4, CliqueKind::Min), 4));
}

TEST_CASE("on forests the embedding route matches the close-class route") {
  std::mt19937 rng(1618);
  int two = 0;
  for (int trial = 0; trial < 250; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
      if (rng() % 4 != 0) {  // skip = start a new component
        int u = static_cast<int>(rng() % v);
        edges.push_back({u, v});
      }
    if (edges.empty()) continue;
    std::shuffle(edges.begin(), edges.end(), rng);
    EdgeOrderedGraph f{n, edges};
    bool via_host = is_chi_two(f);
    CHECK(via_host == has_close_class_2coloring(f));
    two += via_host;
  }
  CHECK(two > 20);
}

TEST_CASE("exactly two coincides with is_chi_two on singletons") {
  for (auto g : {path_pattern({1, 2, 3}), path_pattern({1, 3, 2}),
                 cycle_pattern({1, 2, 3}), cycle_pattern({1, 2, 3, 4}),
                 path_pattern({1, 2, 3, 4}), d_graph(4)}) {
    bool two = order_chromatic({g}, 2) == ChiResult::exactly(2);
    CHECK(two == is_chi_two(g));
  }
}

TEST_CASE("dialemma avoidance cross-checked with the naive oracle") {
  CHECK(!bruteforce::contains_naive(k9_labeling(), d_graph(4)).has_value());
  CHECK(!bruteforce::contains_naive(explower_order(4), d_graph(4)).has_value());
}

TEST_CASE("labeling scan of small shapes") {
  auto p4 = labeling_scan(path_pattern({1, 2, 3}), 2);
  CHECK(p4.classes.size() == 3);
  for (const auto& cls : p4.classes) CHECK(cls.chi == ChiResult::exactly(2));
  CHECK(p4.chi_plus == ChiResult::exactly(2));
  CHECK(p4.chi_minus == ChiResult::exactly(2));

  auto k3 = labeling_scan(cycle_pattern({1, 2, 3}), 3);
  CHECK(k3.classes.size() == 1);
  CHECK(k3.chi_minus == ChiResult::exactly(3));
  CHECK(k3.chi_plus == ChiResult::exactly(3));

  CHECK_THROWS_AS(labeling_scan(canonical_clique(5, CliqueKind::Min), 2),
                  std::invalid_argument);  // 10 edges over the guard
}

TEST_CASE("chi_less ordering") {
  CHECK(chi_less(ChiResult::exactly(2), ChiResult::exactly(3)));
  CHECK(chi_less(ChiResult::exactly(9), ChiResult::exceeds_budget(3)));
  CHECK(chi_less(ChiResult::exceeds_budget(3), ChiResult::infinite()));
  CHECK(!chi_less(ChiResult::infinite(), ChiResult::exactly(2)));
}

TEST_SUITE_END();
