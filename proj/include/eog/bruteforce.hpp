#pragma once

// Naive reference implementations used to cross-check the production code.
// Kept deliberately independent of the search strategies they validate.

#include "eog/containment.hpp"
#include "eog/core.hpp"
#include "eog/matrixfwd.hpp"

#include <optional>

namespace eog::bruteforce {

// Containment by enumerating every injective vertex map.
std::optional<Embedding> contains_naive(const EdgeOrderedGraph& host,
                                        const EdgeOrderedGraph& pattern);

// Isomorphism by enumerating every vertex bijection.
bool isomorphic_naive(const EdgeOrderedGraph& a, const EdgeOrderedGraph& b);

// 0-1 pattern containment by enumerating every row and column subset.
bool matrix_contains_naive(const ZeroOnePattern& m, const ZeroOnePattern& p);

// All simple cycles of length >= 4 (tiny graphs only).
bool has_long_cycle_naive(const SimpleGraph& g);

}  // namespace eog::bruteforce
