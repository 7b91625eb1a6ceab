#pragma once

// Exact desk-scale oracles: lex(n, family) by pruned exhaustive search over
// edge-ordered graphs up to isomorphism, avoiding-labeling search, and a
// classical Turan oracle for cross-checks.

#include "eog/containment.hpp"
#include "eog/core.hpp"

#include <cstdint>
#include <optional>

namespace eog {

struct SearchBudget {
  double seconds = 60.0;
  std::uint64_t max_nodes = 100'000'000;
  std::size_t table_capacity = 1u << 22;  // canonical keys, LRU eviction
  int threads = 1;
};

struct LexResult {
  int value = 0;
  EdgeOrderedGraph witness;
  bool exact = true;  // false: budget ran out, value is a certified lower bound
  std::uint64_t nodes = 0;
};

// Maximum edge count of an n-vertex edge-ordered graph avoiding every family
// member. States grow one edge of new maximal rank at a time (rank prefixes of
// avoiders avoid), are pruned through containment forced onto the new edge,
// and are deduplicated by canonical key.
LexResult lex_exact(int n, const std::vector<EdgeOrderedGraph>& family,
                    const SearchBudget& budget = {});

// A labeling of the underlying graph of `shape` avoiding the family, or
// nullopt when every labeling contains a member. Exhaustive over rank
// insertions with prefix containment pruning and symmetry breaking by the
// automorphisms of the underlying graph. Guarded to small inputs.
std::optional<EdgeOrderedGraph> can_avoid(
    const EdgeOrderedGraph& shape, const std::vector<EdgeOrderedGraph>& family,
    int max_edges = 10, int max_vertices = 8);

// Classical Turan number by exhaustive enumeration of all edge subsets.
int ex_exact(int n, const SimpleGraph& h);

}  // namespace eog
