#pragma once

// Core data model for edge-ordered graphs: construction, isomorphism,
// canonical forms, serialization and elementary structural predicates.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eog {

// Endpoints of an edge, stored with first < second.
using Edge = std::pair<int, int>;

// A simple graph on vertices 0..n-1 whose edges carry a total order:
// edges[t] is the edge of rank t+1. Isolated vertices are carried
// explicitly, so n may exceed the number of touched vertices.
struct EdgeOrderedGraph {
  int n = 0;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;
  friend bool operator==(const EdgeOrderedGraph&, const EdgeOrderedGraph&) = default;
};

// Validates endpoints, rejects self-loops and duplicates, normalizes u < v.
EdgeOrderedGraph make_eog(int n, std::vector<Edge> edges);

// A plain simple graph (no edge order). Edge list order carries no meaning.
struct SimpleGraph {
  int n = 0;
  std::vector<Edge> edges;
  int edge_count() const { return static_cast<int>(edges.size()); }
};

SimpleGraph make_simple(int n, std::vector<Edge> edges);
SimpleGraph underlying(const EdgeOrderedGraph& g);
// Ranks assigned by edge list position.
EdgeOrderedGraph with_list_order(const SimpleGraph& g);

bool is_bipartite(const SimpleGraph& g);

enum class Side : unsigned char { Left, Right };

// An edge-ordered graph with a left/right bipartition and an optional root,
// used for rooted left-/right-containment.
struct SidedPattern {
  EdgeOrderedGraph graph;
  std::vector<Side> side;
  std::optional<int> root;
};

// Validates that every edge joins a left and a right vertex.
SidedPattern make_sided(EdgeOrderedGraph g, std::vector<Side> side,
                        std::optional<int> root = std::nullopt);

// Opaque totally ordered value; equal if and only if the graphs are
// isomorphic as edge-ordered graphs.
using CanonicalKey = std::string;

// Path on k+1 vertices 0-1-...-k where edge (i, i+1) has rank perm[i].
// perm must be a permutation of 1..k. Vertex 0 is the conventional root.
EdgeOrderedGraph path_pattern(const std::vector<int>& perm);
// Cycle on k >= 3 vertices where edge (i, (i+1) mod k) has rank perm[i].
EdgeOrderedGraph cycle_pattern(const std::vector<int>& perm);
// path_pattern wrapped as a SidedPattern rooted at vertex 0, sides by parity.
SidedPattern rooted_path(const std::vector<int>& perm);

CanonicalKey canonical_key(const EdgeOrderedGraph& g);
bool are_isomorphic(const EdgeOrderedGraph& a, const EdgeOrderedGraph& b);

// Edge of rank t gets rank m+1-t; underlying graph unchanged.
EdgeOrderedGraph reverse_order(const EdgeOrderedGraph& g);

// A vertex is close when its incident edge ranks form a contiguous interval.
// Isolated vertices count as close.
bool is_close(const EdgeOrderedGraph& g, int v);
std::vector<int> close_vertices(const EdgeOrderedGraph& g);

bool is_star_forest(const EdgeOrderedGraph& g);
bool has_cycle_length_ge4(const EdgeOrderedGraph& g);

// Induced subgraph on the given vertices (which are re-indexed by their
// position in `vertices`), with the induced edge order.
EdgeOrderedGraph induced_subgraph(const EdgeOrderedGraph& g,
                                  const std::vector<int>& vertices);

std::vector<int> degrees(const EdgeOrderedGraph& g);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// .eog text format: line 1 "n m", then m lines "u v" (0-based); the line
// index is the rank. A third column of real labels may be given instead, in
// which case the ranks come from sorting the labels (ties rejected). Lines
// starting with '#' are ignored.
EdgeOrderedGraph parse_eog(const std::string& text);
std::string serialize_eog(const EdgeOrderedGraph& g);
// Side tags are emitted as a "# sides ..." comment, readable by parse_eog.
std::string serialize_eog(const SidedPattern& host);

}  // namespace eog
