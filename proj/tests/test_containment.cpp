#include "eog/bruteforce.hpp"
#include "eog/canonical.hpp"
#include "eog/constructions.hpp"
#include "eog/containment.hpp"
#include "eog/random_graphs.hpp"

#include <doctest.h>

#include <random>

using namespace eog;

TEST_SUITE_BEGIN("containment");

TEST_CASE("paper cases for the 4-edge paths") {
  EdgeOrderedGraph p1423 = path_pattern({1, 4, 2, 3});
  CHECK(!contains(canonical_clique(5, CliqueKind::Max), p1423));
  auto emb = contains(canonical_clique(5, CliqueKind::Min), p1423);
  REQUIRE(emb.has_value());
  CHECK(is_valid_embedding(canonical_clique(5, CliqueKind::Min), p1423, *emb));
}

TEST_CASE("single edge pattern embeds anywhere non-empty") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    EdgeOrderedGraph host = random_nonempty_eog(rng, 6, 8);
    CHECK(contains(host, path_pattern({1})).has_value());
  }
  CHECK_THROWS_AS(contains(path_pattern({1}), EdgeOrderedGraph{}),
                  std::invalid_argument);
}

TEST_CASE("avoids_family") {
  EdgeOrderedGraph k6max = canonical_clique(6, CliqueKind::Max);
  CHECK(avoids_family(k6max, {path_pattern({1, 4, 2, 3}), path_pattern({2, 4, 1, 3})}));
  EdgeOrderedGraph empty{3, {}};
  CHECK(avoids_family(empty, {path_pattern({1})}));
}

TEST_CASE("agrees with the all-injections oracle") {
  std::mt19937 rng(2024);
  int contained = 0;
  for (int trial = 0; trial < 300; ++trial) {
    EdgeOrderedGraph host = random_eog(rng, 7, 10);
    EdgeOrderedGraph pat = random_nonempty_eog(rng, 5, 4);
    auto fast = contains(host, pat);
    auto naive = bruteforce::contains_naive(host, pat);
    REQUIRE(fast.has_value() == naive.has_value());
    if (fast) {
      ++contained;
      CHECK(is_valid_embedding(host, pat, *fast));
    }
  }
  CHECK(contained > 10);  // the sample must exercise both outcomes
  CHECK(contained < 290);
}

TEST_CASE("witness has the least edge map") {
  // two embeddings exist; the lexicographically least edge_map must win
  EdgeOrderedGraph host = make_eog(5, {{0, 1}, {2, 3}, {3, 4}, {1, 2}});
  EdgeOrderedGraph pat = path_pattern({1});
  auto emb = contains(host, pat);
  REQUIRE(emb.has_value());
  CHECK(emb->edge_map == std::vector<int>{0});
}

TEST_CASE("reversal duality and monotonicity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    EdgeOrderedGraph host = random_eog(rng, 6, 8);
    EdgeOrderedGraph pat = random_nonempty_eog(rng, 4, 3);
    bool direct = contains(host, pat).has_value();
    CHECK(direct == contains(reverse_order(host), reverse_order(pat)).has_value());
    if (host.edge_count() > 0) {
      EdgeOrderedGraph smaller = host;
      smaller.edges.erase(smaller.edges.begin() + (rng() % smaller.edges.size()));
      if (!direct) CHECK(!contains(smaller, pat).has_value());
    }
  }
}

TEST_CASE("transitivity on sampled triples") {
  std::mt19937 rng(13);
  int hits = 0;
  for (int trial = 0; trial < 400 && hits < 40; ++trial) {
    EdgeOrderedGraph g = random_eog(rng, 6, 8);
    EdgeOrderedGraph h = random_nonempty_eog(rng, 5, 5);
    EdgeOrderedGraph f = random_nonempty_eog(rng, 4, 3);
    if (contains(g, h) && contains(h, f)) {
      ++hits;
      CHECK(contains(g, f).has_value());
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("contains_with_last_edge only allows the maximal edge") {
  // host: path 123 plus a larger extra edge; pattern 12-path embeds, but not
  // using the host maximum
  EdgeOrderedGraph host = make_eog(5, {{0, 1}, {1, 2}, {3, 4}});
  EdgeOrderedGraph pat = path_pattern({1, 2});
  CHECK(contains(host, pat).has_value());
  CHECK(!contains_with_last_edge(host, pat).has_value());
  EdgeOrderedGraph host2 = make_eog(3, {{0, 1}, {1, 2}});
  CHECK(contains_with_last_edge(host2, pat).has_value());
}

TEST_CASE("side containment") {
  // a single host edge with left u and right v
  SidedPattern host = make_sided(make_eog(2, {{0, 1}}), {Side::Left, Side::Right});
  SidedPattern pat = make_sided(make_eog(2, {{0, 1}}), {Side::Left, Side::Right}, 0);
  auto left = side_contains(host, pat, Side::Left);
  REQUIRE(left.has_value());
  CHECK(left->vertex_map[0] == 0);
  auto right = side_contains(host, pat, Side::Right);
  REQUIRE(right.has_value());
  CHECK(right->vertex_map[0] == 1);

  SidedPattern unrooted = make_sided(make_eog(2, {{0, 1}}), {Side::Left, Side::Right});
  CHECK_THROWS_AS(side_contains(host, unrooted, Side::Left), std::invalid_argument);
}

TEST_CASE("avoiders of path 132 have no long cycle and few edges") {
  std::mt19937 rng(271828);
  EdgeOrderedGraph p132 = path_pattern({1, 3, 2});
  int avoiders = 0;
  for (int trial = 0; trial < 400; ++trial) {
    EdgeOrderedGraph g = random_eog(rng, 7, 9);
    if (!avoids_family(g, {p132})) continue;
    ++avoiders;
    CHECK(!has_cycle_length_ge4(g));
    CHECK(g.edge_count() <= 3 * (g.n - 1) / 2);
  }
  CHECK(avoiders > 30);
}

TEST_CASE("side containment on the doubling construction") {
  SidedPattern pat132 = rooted_path({1, 3, 2});
  for (int i = 1; i <= 5; ++i) {
    SidedPattern host = rightright(i);
    CHECK(!side_contains(host, pat132, Side::Right).has_value());
    bool left = side_contains(host, pat132, Side::Left).has_value();
    CHECK(left == (i >= 3));  // archived: the 3-edge instance at i=2 is monotone
  }
}

TEST_SUITE_END();
