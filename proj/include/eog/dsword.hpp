#pragma once

// Words over abstract letters, compared up to renaming: the Davenport-Schinzel
// side of the star-forest Turan problem.

#include "eog/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace eog {

// Letters are nonnegative integers; only the equality pattern matters.
struct Word {
  std::vector<int> letters;

  int size() const { return static_cast<int>(letters.size()); }
  int distinct() const;
  friend bool operator==(const Word&, const Word&) = default;
};

// Lowercase string form for alphabets of at most 26 letters ("abab"), falling
// back to space-separated integers.
Word word_from_string(const std::string& s);
std::string word_to_string(const Word& w);

// Same equality pattern in both words.
bool equivalent(const Word& u, const Word& v);

// True iff some subword of u is equivalent to f. f must be non-empty.
bool contains_word(const Word& u, const Word& f);

// Every k consecutive letters distinct (all letters distinct when |u| < k).
bool is_k_regular(const Word& u, int k);

// Left-to-right greedy k-regular subword: each letter is appended when the
// result stays k-regular. For u = u_of(G) with m edges the output length
// exceeds m/(k-1).
Word greedy_k_regular(const Word& u, int k);

// Component word of an edge-ordered star forest: letter i of the result names
// the component owning the edge of rank i+1.
Word w_of(const EdgeOrderedGraph& star_forest);
// w_of with every letter repeated 2m times (m = edge count).
Word w_prime_of(const EdgeOrderedGraph& star_forest);

// Endpoints of each edge listed in rank order, smaller vertex first.
Word u_of(const EdgeOrderedGraph& g);
// Variant flipping the endpoint order of edge t when bit t of flip_mask is set.
Word u_of(const EdgeOrderedGraph& g, std::uint64_t flip_mask);

struct DsResult {
  int length = 0;
  bool exact = true;  // false when the max_len guard stopped the search
};

// Exact length of the longest ||f||-regular word on at most n letters avoiding
// f, by exhaustive extension search with first-occurrence letter canonization.
DsResult ds_bruteforce(int n, const Word& f, int max_len = 64);

}  // namespace eog
