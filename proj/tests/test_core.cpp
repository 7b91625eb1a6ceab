#include "eog/bruteforce.hpp"
#include "eog/core.hpp"
#include "eog/random_graphs.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace eog;

TEST_SUITE_BEGIN("core");

TEST_CASE("path_pattern lays ranks along the path") {
  EdgeOrderedGraph g = path_pattern({1, 3, 2});
  CHECK(g.n == 4);
  CHECK(g.edges == std::vector<Edge>{{0, 1}, {2, 3}, {1, 2}});  // ab < cd < bc

  CHECK(path_pattern({1}).edges == std::vector<Edge>{{0, 1}});

  EdgeOrderedGraph p5 = path_pattern({2, 3, 1, 4});
  CHECK(p5.edges == std::vector<Edge>{{2, 3}, {0, 1}, {1, 2}, {3, 4}});  // cd<ab<bc<de
}

TEST_CASE("path_pattern rejects non-permutations") {
  CHECK_THROWS_AS(path_pattern({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(path_pattern({2}), std::invalid_argument);
  CHECK_THROWS_AS(path_pattern({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(path_pattern({}), std::invalid_argument);
}

TEST_CASE("cycle_pattern basics") {
  EdgeOrderedGraph c4 = cycle_pattern({1, 2, 3, 4});
  CHECK(c4.n == 4);
  CHECK(c4.edges == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK_THROWS_AS(cycle_pattern({1, 2}), std::invalid_argument);

  // all labelings of the triangle are isomorphic
  std::vector<int> perm{1, 2, 3};
  EdgeOrderedGraph first = cycle_pattern(perm);
  do {
    CHECK(are_isomorphic(first, cycle_pattern(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("canonical_key matches isomorphism") {
  CHECK(canonical_key(path_pattern({1, 3, 2})) ==
        canonical_key(path_pattern({2, 3, 1})));
  CHECK(canonical_key(path_pattern({1, 2, 3})) !=
        canonical_key(path_pattern({1, 3, 2})));

  std::mt19937 rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    EdgeOrderedGraph g = random_eog(rng, 6, 6);
    // random vertex relabeling
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EdgeOrderedGraph h;
    h.n = g.n;
    for (auto [u, v] : g.edges) {
      int a = perm[u], b = perm[v];
      if (a > b) std::swap(a, b);
      h.edges.push_back({a, b});
    }
    CHECK(canonical_key(g) == canonical_key(h));
  }
}

TEST_CASE("canonical_key against the all-bijections oracle") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 150; ++trial) {
    EdgeOrderedGraph a = random_eog(rng, 5, 6);
    EdgeOrderedGraph b = random_eog(rng, 5, 6);
    CHECK(are_isomorphic(a, b) == bruteforce::isomorphic_naive(a, b));
  }
}

TEST_CASE("reverse_order") {
  EdgeOrderedGraph p132 = path_pattern({1, 3, 2});
  CHECK(are_isomorphic(reverse_order(p132), path_pattern({2, 1, 3})));
  CHECK(reverse_order(reverse_order(p132)) == p132);
  EdgeOrderedGraph c = cycle_pattern({1, 2, 3, 4});
  CHECK(are_isomorphic(reverse_order(c), c));
}

TEST_CASE("close vertices") {
  EdgeOrderedGraph c4 = cycle_pattern({1, 2, 3, 4});
  CHECK(close_vertices(c4).size() == 3);

  EdgeOrderedGraph e = path_pattern({1});
  CHECK(close_vertices(e) == std::vector<int>{0, 1});

  // neither endpoint of the smallest edge of path 2314 is close
  EdgeOrderedGraph p2314 = path_pattern({2, 3, 1, 4});
  auto [u, v] = p2314.edges[0];
  CHECK(!is_close(p2314, u));
  CHECK(!is_close(p2314, v));
  // symmetrically for the largest edge of path 1423
  EdgeOrderedGraph p1423 = path_pattern({1, 4, 2, 3});
  auto [x, y] = p1423.edges[p1423.edge_count() - 1];
  CHECK(!is_close(p1423, x));
  CHECK(!is_close(p1423, y));

  // isolated vertices are close
  EdgeOrderedGraph iso = make_eog(3, {{0, 1}});
  CHECK(is_close(iso, 2));
}

TEST_CASE("close vertices commute with isomorphism") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    EdgeOrderedGraph g = random_eog(rng, 6, 7);
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EdgeOrderedGraph h;
    h.n = g.n;
    for (auto [u, v] : g.edges) {
      int a = perm[u], b = perm[v];
      if (a > b) std::swap(a, b);
      h.edges.push_back({a, b});
    }
    for (int v = 0; v < g.n; ++v) CHECK(is_close(g, v) == is_close(h, perm[v]));
  }
}

TEST_CASE("star forest and long cycle predicates") {
  EdgeOrderedGraph two_stars = make_eog(6, {{0, 1}, {0, 2}, {3, 4}, {3, 5}});
  CHECK(is_star_forest(two_stars));
  CHECK(!has_cycle_length_ge4(two_stars));

  EdgeOrderedGraph k4 = make_eog(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(!is_star_forest(k4));
  CHECK(has_cycle_length_ge4(k4));

  EdgeOrderedGraph triangle = cycle_pattern({1, 2, 3});
  CHECK(!is_star_forest(triangle));
  CHECK(!has_cycle_length_ge4(triangle));

  EdgeOrderedGraph empty;
  CHECK(!is_star_forest(empty));

  // two triangles sharing a vertex: 3-cycles only
  EdgeOrderedGraph bowtie = make_eog(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  CHECK(!has_cycle_length_ge4(bowtie));
  // diamond has a 4-cycle
  EdgeOrderedGraph diamond = make_eog(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  CHECK(has_cycle_length_ge4(diamond));
}

TEST_CASE("long cycle predicate against cycle enumeration") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    EdgeOrderedGraph g = random_eog(rng, 7, 10);
    CHECK(has_cycle_length_ge4(g) == bruteforce::has_long_cycle_naive(underlying(g)));
  }
}

TEST_CASE("parse and serialize") {
  EdgeOrderedGraph g = parse_eog("3 2\n0 1\n1 2\n");
  CHECK(g.n == 3);
  CHECK(g.edges == std::vector<Edge>{{0, 1}, {1, 2}});

  CHECK(parse_eog("# comment\n3 2\n1 0\n# mid\n1 2\n").edges ==
        std::vector<Edge>{{0, 1}, {1, 2}});

  std::mt19937 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    EdgeOrderedGraph r = random_eog(rng, 7, 9);
    CHECK(parse_eog(serialize_eog(r)) == r);
  }

  // optional third column: explicit real labels, sorted, ties rejected
  EdgeOrderedGraph lab = parse_eog("4 3\n0 1 2.5\n1 2 -1\n2 3 0.25\n");
  CHECK(lab.edges == std::vector<Edge>{{1, 2}, {2, 3}, {0, 1}});
  CHECK_THROWS_WITH_AS(parse_eog("3 2\n0 1 1\n1 2 1\n"), "parse_eog: duplicate label",
                       ParseError);
  CHECK_THROWS_AS(parse_eog("3 2\n0 1 1\n1 2\n"), ParseError);

  CHECK_THROWS_WITH_AS(parse_eog("2 1\n0 0\n"), "parse_eog: self-loop", ParseError);
  CHECK_THROWS_WITH_AS(parse_eog("2 1\n0 7\n"), "parse_eog: endpoint out of range",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_eog("3 2\n0 1\n1 0\n"), "parse_eog: duplicate edge",
                       ParseError);
  CHECK_THROWS_AS(parse_eog("x y\n"), ParseError);
  CHECK_THROWS_AS(parse_eog(""), ParseError);
  CHECK_THROWS_AS(parse_eog("3 2\n0 1\n"), ParseError);
}

TEST_CASE("make_eog validation") {
  CHECK_THROWS_AS(make_eog(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_eog(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_eog(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK(make_eog(3, {{2, 0}}).edges == std::vector<Edge>{{0, 2}});  // normalized
}

TEST_CASE("induced subgraph keeps the induced order") {
  EdgeOrderedGraph g = path_pattern({2, 3, 1, 4});  // cd < ab < bc < de
  EdgeOrderedGraph sub = induced_subgraph(g, {1, 2, 3});
  CHECK(sub.n == 3);
  CHECK(sub.edges == std::vector<Edge>{{1, 2}, {0, 1}});  // cd then bc
}

TEST_CASE("sided pattern validation") {
  CHECK_THROWS_AS(make_sided(path_pattern({1}), {Side::Left, Side::Left}),
                  std::invalid_argument);
  SidedPattern sp = rooted_path({1, 3, 2});
  CHECK(sp.root == 0);
  CHECK(sp.side[0] == Side::Left);
  CHECK(sp.side[1] == Side::Right);
}

TEST_SUITE_END();
