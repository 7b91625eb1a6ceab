#pragma once

// Explicit extremal constructions, each with an avoidance contract that the
// containment engine re-verifies in the test suites. Arbitrary choices
// (matchings, tie-breaks, in-matching order) are pinned to fixed rules so the
// outputs are byte-reproducible.

#include "eog/canonical.hpp"
#include "eog/containment.hpp"
#include "eog/core.hpp"

namespace eog {

// n-vertex star plus a matching on its leaves, star edges first; floor(3(n-1)/2)
// edges, avoids the path pattern 132.
EdgeOrderedGraph star_plus_matching(int n);

// c disjoint K_4 blocks, each ordered so the two smallest and the two largest
// ranks sit on independent edge pairs; avoids the monotone 3-edge path.
EdgeOrderedGraph disjoint_k4(int c);

// Doubling construction: two copies joined by a matching whose edges are
// larger than everything else. 2^i vertices, i*2^(i-1) edges, avoids path 1342.
EdgeOrderedGraph recursive_g(int i);
// Variant with the matching ranked between the two copies; avoids path 2143.
EdgeOrderedGraph recursive_g_prime(int i);

// Sided doubling construction joining left vertices of the first copy to
// right vertices of the second; right-avoids paths 132 and 213.
// 2^(i-1) left + 2^(i-1) right vertices, (i+1)*2^(i-2) edges (1 when i = 1).
SidedPattern rightright(int i);

// Vertices x_1..x_n with the 2n-3 edges at x_1 or x_n ordered
// x_1x_2 < ... < x_1x_n < x_2x_n < ... < x_(n-1)x_n. d_graph(4) is the diamond.
EdgeOrderedGraph d_graph(int n);

// The 9-vertex labeling found by computer search certifying that the order
// chromatic number of the diamond is at least 10; transcribed as literal data.
EdgeOrderedGraph k9_labeling();

// Complete graph on the binary strings of length n-2, edges ordered by longest
// common prefix length, then by |x-y| as binary numbers, then by endpoint pair.
// Avoids d_graph(n) with all auxiliary graphs bipartite.
EdgeOrderedGraph explower_order(int n);

// The explicit embedding of d_graph(n) into canonical_clique(n, kind):
// natural vertex order for min/max, x_1,x_n,...,x_2 for inverse-min and
// x_(n-1),...,x_1,x_n for inverse-max.
Embedding embed_d_canonical(int n, CliqueKind kind);

struct TuranWitnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A labeling of the Turan graph T(n, r) avoiding the family, obtained by
// restricting an avoiding canonical edge-order of the complete r-partite
// graph. Throws TuranWitnessError when no canonical order avoids the family
// (the family's order chromatic number is at most r).
EdgeOrderedGraph turan_witness(int n, int r,
                               const std::vector<EdgeOrderedGraph>& family);

}  // namespace eog
