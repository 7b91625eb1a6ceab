#pragma once

// The four canonical labelings of K_n, the canonical complete bipartite host,
// and enumeration of all canonical edge-orders of the complete multipartite
// graph on k classes of n vertices.

#include "eog/core.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace eog {

enum class CliqueKind { Min, Max, InvMin, InvMax };

const char* to_string(CliqueKind kind);
constexpr CliqueKind kAllCliqueKinds[] = {CliqueKind::Min, CliqueKind::Max,
                                          CliqueKind::InvMin, CliqueKind::InvMax};

// K_n with ranks induced by ni+j / nj+i / ni-j / nj-i over 1 <= i < j <= n.
EdgeOrderedGraph canonical_clique(int n, CliqueKind kind);

// Complete bipartite host on left u_1..u_n, right v_1..v_n with the rank of
// u_i v_j given by ni+j. Every left vertex is close.
SidedPattern knn_can(int n);

// How two parts of the multipartite graph relate in a canonical edge-order.
// Interleave variants only apply to parts sharing a class; the pivot of an
// edge is its endpoint index within the shared class.
enum PairRelation : int {
  kFirstPrecedes = 0,
  kSecondPrecedes = 1,
  kInterleaveLt = 2,  // edge of first part smaller iff its pivot <  other's
  kInterleaveLe = 3,  // ... iff its pivot <= other's
  kInterleaveGt = 4,
  kInterleaveGe = 5,
};

// Symbolic description of one candidate canonical edge-order of the complete
// k-partite graph with classes of size n. Parts (complete bipartite subgraphs
// between two classes) are indexed by the lexicographic order of their class
// pairs; part_labeling picks one of the eight index formulas per part, and
// pair_relation fixes each unordered pair of parts (first < second).
struct CanonicalSpec {
  int k = 0, n = 0;
  std::vector<int> part_labeling;  // one of 0..7 per part
  std::vector<int> pair_relation;  // PairRelation per part pair

  std::string to_string() const;
};

struct CanonicalEnumStats {
  std::uint64_t raw = 0;         // candidate specs examined
  std::uint64_t realized = 0;    // specs whose relation is a linear order
  std::uint64_t interleaved = 0; // realized specs with an interleaved pair
  bool small_n_warning = false;  // n == 2: counts need not match n >= 3
  bool budget_exceeded = false;
  bool stopped = false;          // visitor asked to stop
};

// Enumerates candidate specs in lexicographic order and realizes the ones
// whose induced edge relation is a total order. The visitor returns false to
// stop. k >= 4 with n == 2 is rejected; n == 2 with k <= 3 sets the warning.
CanonicalEnumStats enumerate_canonical(
    int k, int n,
    const std::function<bool(const CanonicalSpec&, const EdgeOrderedGraph&)>& visit,
    std::uint64_t max_raw_specs = 50'000'000);

// Realization of a single spec; nullopt when the relation is not linear.
std::optional<EdgeOrderedGraph> realize_spec(const CanonicalSpec& spec);

int multipartite_vertex(int k, int n, int cls, int idx);

}  // namespace eog
