#pragma once

// Decides whether a host edge-ordered graph contains a pattern
// (order-preserving subgraph embedding), incl. rooted left/right containment.

#include "eog/core.hpp"

#include <functional>
#include <optional>

namespace eog {

// Witness of containment. edge_map is strictly increasing in pattern rank and
// each mapped host edge joins the images of the pattern edge's endpoints.
struct Embedding {
  std::vector<int> vertex_map;  // pattern vertex -> host vertex
  std::vector<int> edge_map;    // pattern rank index -> host rank index
};

// Returns an embedding iff one exists; the witness has the lexicographically
// least edge_map. Patterns must have at least one edge.
std::optional<Embedding> contains(const EdgeOrderedGraph& host,
                                  const EdgeOrderedGraph& pattern);

// As contains(), but the pattern's maximal edge must map onto the host's
// maximal edge. Search modules use this for incremental pruning: a containment
// created by adding a new maximal host edge must use it as the pattern maximum.
std::optional<Embedding> contains_with_last_edge(const EdgeOrderedGraph& host,
                                                 const EdgeOrderedGraph& pattern);

bool avoids_family(const EdgeOrderedGraph& host,
                   const std::vector<EdgeOrderedGraph>& family);
bool hits_family_with_last_edge(const EdgeOrderedGraph& host,
                                const std::vector<EdgeOrderedGraph>& family);

// Rooted containment in a sided bipartite host: witness maps the pattern's
// root onto a host vertex of the requested side. The pattern must be rooted.
std::optional<Embedding> side_contains(const SidedPattern& host,
                                       const SidedPattern& pattern, Side mode);

bool is_valid_embedding(const EdgeOrderedGraph& host,
                        const EdgeOrderedGraph& pattern, const Embedding& emb);

}  // namespace eog
