#pragma once

// Decision procedures for the order chromatic number of finite families of
// edge-ordered graphs, built on canonical labelings of complete (multipartite)
// graphs.

#include "eog/canonical.hpp"
#include "eog/containment.hpp"
#include "eog/core.hpp"

#include <cstdint>

namespace eog {

using Family = std::vector<EdgeOrderedGraph>;

struct ChiResult {
  enum class Kind { Exactly, ExceedsBudget, Infinite };
  Kind kind = Kind::Infinite;
  // Exactly: the order chromatic number. ExceedsBudget: the largest k for
  // which "chi > k" was established before the budget ran out.
  int k = 0;

  static ChiResult exactly(int k) { return {Kind::Exactly, k}; }
  static ChiResult exceeds_budget(int k) { return {Kind::ExceedsBudget, k}; }
  static ChiResult infinite() { return {Kind::Infinite, 0}; }
  friend bool operator==(const ChiResult&, const ChiResult&) = default;
  std::string to_string() const;
};

// Three-valued decision: budget exhaustion is distinct from a verdict.
enum class Decision { True, False, Budget };

// chi = 2 iff the canonical complete bipartite graph on the pattern's vertex
// count contains it.
bool is_chi_two(const EdgeOrderedGraph& h);

// chi = infinity iff one of the four canonical labelings of K_v avoids the
// family, where v is the largest member vertex count.
bool is_chi_infinite(const Family& family);

// chi > k iff some canonical edge-order of the complete k-partite graph with
// classes of size max(v, 3) avoids the family (class size v when k = 2).
Decision chi_exceeds(const Family& family, int k,
                     std::uint64_t max_specs = 50'000'000);

ChiResult order_chromatic(const Family& family, int kmax,
                          std::uint64_t max_specs = 50'000'000);

// Necessary condition for chi = 2; also sufficient for forests: a proper
// 2-coloring with every vertex of one color class close.
bool has_close_class_2coloring(const EdgeOrderedGraph& h);

// For a labeling K of a complete graph and a vertex x: the graph on the other
// vertices with an edge yz whenever rank(yz) lies strictly between the ranks
// of xy and xz. Vertex x stays in the vertex set but is isolated.
SimpleGraph auxiliary_graph(const EdgeOrderedGraph& complete, int x);

// True iff K avoids the graph D_n and every auxiliary graph is bipartite;
// certifies that the order chromatic number of D_n exceeds the size of K.
bool dialemma_check(const EdgeOrderedGraph& complete, int dn);

struct LabelingClass {
  EdgeOrderedGraph representative;
  ChiResult chi;
};

struct LabelingScanReport {
  std::vector<LabelingClass> classes;
  ChiResult chi_minus;  // least result over the classes
  ChiResult chi_plus;   // greatest result over the classes
};

// Classifies every edge-ordering of the underlying graph of `shape` up to
// isomorphism. Guarded: at most max_edges edges (m! orderings before dedup).
LabelingScanReport labeling_scan(const EdgeOrderedGraph& shape, int kmax,
                                 int max_edges = 8,
                                 std::uint64_t max_specs = 50'000'000);

// Exactly(a) < Exactly(b) iff a < b; every Exactly < ExceedsBudget < Infinite.
bool chi_less(const ChiResult& a, const ChiResult& b);

}  // namespace eog
