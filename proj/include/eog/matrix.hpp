#pragma once

// Forbidden 0-1 submatrix containment and the matrix -> edge-ordered
// bipartite graph functor.

#include "eog/core.hpp"
#include "eog/matrixfwd.hpp"

namespace eog {

// Validates positions, sorts and dedupes rejected as errors.
ZeroOnePattern make_pattern(int rows, int cols,
                            std::vector<std::pair<int, int>> ones);

// True iff P can be obtained from a submatrix of M (order-preserving row and
// column selections) by switching extra 1 entries to 0.
bool contains_pattern(const ZeroOnePattern& m, const ZeroOnePattern& p);

// Left vertex per row, right vertex per column, one edge per 1-entry. An entry
// in a column further right is larger; within a column the lower entry is
// larger.
SidedPattern graph_from_matrix_rowcol(const ZeroOnePattern& m);

// Ranks by column with in-column ties pinned to row order.
SidedPattern graph_from_matrix_col(const ZeroOnePattern& m);

// All 0-1 matrices P of minimal dimensions (rows + cols equal to the vertex
// count of H) with graph_from_matrix_rowcol(P) isomorphic to H. H must have a
// bipartite underlying graph.
std::vector<ZeroOnePattern> patterns_for(const EdgeOrderedGraph& h);

// .mat text format: line 1 "rows cols", then rows of 0/1 characters.
ZeroOnePattern parse_mat(const std::string& text);
std::string serialize_mat(const ZeroOnePattern& m);

}  // namespace eog
