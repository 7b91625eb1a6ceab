#include "eog/constructions.hpp"

#include <algorithm>
#include <bit>

namespace eog {

EdgeOrderedGraph star_plus_matching(int n) {
  if (n < 1) throw std::invalid_argument("star_plus_matching: n >= 1 required");
  EdgeOrderedGraph g;
  g.n = n;
  for (int v = 1; v < n; ++v) g.edges.push_back({0, v});
  for (int v = 1; v + 1 < n; v += 2) g.edges.push_back({v, v + 1});
  return g;
}

EdgeOrderedGraph disjoint_k4(int c) {
  if (c < 1) throw std::invalid_argument("disjoint_k4: c >= 1 required");
  EdgeOrderedGraph g;
  g.n = 4 * c;
  for (int b = 0; b < c; ++b) {
    int o = 4 * b;
    // two smallest on an independent pair, two largest on another
    g.edges.push_back({o + 0, o + 1});
    g.edges.push_back({o + 2, o + 3});
    g.edges.push_back({o + 0, o + 3});
    g.edges.push_back({o + 1, o + 2});
    g.edges.push_back({o + 0, o + 2});
    g.edges.push_back({o + 1, o + 3});
  }
  return g;
}

namespace {

EdgeOrderedGraph doubled(int i, bool matching_on_top) {
  EdgeOrderedGraph g;
  g.n = 1;
  for (int step = 0; step < i; ++step) {
    int half = g.n;
    EdgeOrderedGraph next;
    next.n = 2 * half;
    auto add_copy = [&](int offset) {
      for (auto [u, v] : g.edges) next.edges.push_back({u + offset, v + offset});
    };
    add_copy(0);  // small copy keeps its ranks below the large copy's
    if (!matching_on_top) {
      for (int j = 0; j < half; ++j) next.edges.push_back({j, j + half});
      add_copy(half);
    } else {
      add_copy(half);
      for (int j = 0; j < half; ++j) next.edges.push_back({j, j + half});
    }
    g = std::move(next);
  }
  return g;
}

}  // namespace

EdgeOrderedGraph recursive_g(int i) {
  if (i < 0) throw std::invalid_argument("recursive_g: i >= 0 required");
  return doubled(i, true);
}

EdgeOrderedGraph recursive_g_prime(int i) {
  if (i < 0) throw std::invalid_argument("recursive_g_prime: i >= 0 required");
  return doubled(i, false);
}

SidedPattern rightright(int i) {
  if (i < 1) throw std::invalid_argument("rightright: i >= 1 required");
  EdgeOrderedGraph g;
  g.n = 2;
  g.edges = {{0, 1}};
  std::vector<Side> side{Side::Left, Side::Right};
  for (int step = 1; step < i; ++step) {
    int half = g.n;
    EdgeOrderedGraph next;
    next.n = 2 * half;
    std::vector<Side> nside(2 * half);
    for (int v = 0; v < half; ++v) {
      nside[v] = side[v];
      nside[v + half] = side[v];
    }
    for (auto [u, v] : g.edges) next.edges.push_back({u, v});
    // matching: j-th left vertex of the first copy to the j-th right vertex
    // of the second copy, in index order
    std::vector<int> lefts, rights;
    for (int v = 0; v < half; ++v) {
      if (side[v] == Side::Left) lefts.push_back(v);
      if (side[v] == Side::Right) rights.push_back(v + half);
    }
    for (size_t j = 0; j < lefts.size(); ++j) {
      int a = lefts[j], b = rights[j];
      if (a > b) std::swap(a, b);
      next.edges.push_back({a, b});
    }
    for (auto [u, v] : g.edges) next.edges.push_back({u + half, v + half});
    g = std::move(next);
    side = std::move(nside);
  }
  return SidedPattern{std::move(g), std::move(side), std::nullopt};
}

EdgeOrderedGraph d_graph(int n) {
  if (n < 2) throw std::invalid_argument("d_graph: n >= 2 required");
  EdgeOrderedGraph g;
  g.n = n;
  for (int j = 1; j < n; ++j) g.edges.push_back({0, j});
  for (int i = 1; i + 1 < n; ++i) g.edges.push_back({i, n - 1});
  return g;
}

EdgeOrderedGraph k9_labeling() {
  // upper triangle, rows 1..8: entry (i,j) is the rank of edge v_i v_j
  static const int kRank[8][8] = {
      {1, 2, 3, 4, 33, 34, 35, 36},
      {26, 25, 29, 30, 5, 27, 8, 0},
      {24, 15, 7, 20, 18, 17, 0, 0},
      {11, 31, 22, 23, 9, 0, 0, 0},
      {10, 12, 13, 16, 0, 0, 0, 0},
      {32, 28, 6, 0, 0, 0, 0, 0},
      {21, 14, 0, 0, 0, 0, 0, 0},
      {19, 0, 0, 0, 0, 0, 0, 0},
  };
  EdgeOrderedGraph g;
  g.n = 9;
  g.edges.assign(36, {0, 0});
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 9; ++j) {
      int rank = kRank[i][j - i - 1];
      g.edges[rank - 1] = {i, j};
    }
  return g;
}

EdgeOrderedGraph explower_order(int n) {
  if (n < 2) throw std::invalid_argument("explower_order: n >= 2 required");
  int w = n - 2;
  int size = 1 << w;
  struct Key {
    int lcp, diff, u, v;
    bool operator<(const Key& o) const {
      return std::tie(lcp, diff, u, v) < std::tie(o.lcp, o.diff, o.u, o.v);
    }
  };
  std::vector<Key> keys;
  for (int u = 0; u < size; ++u)
    for (int v = u + 1; v < size; ++v) {
      unsigned x = static_cast<unsigned>(u ^ v);
      int lcp = w - std::bit_width(x);
      keys.push_back({lcp, v - u, u, v});
    }
  std::sort(keys.begin(), keys.end());
  EdgeOrderedGraph g;
  g.n = size;
  for (const Key& k : keys) g.edges.push_back({k.u, k.v});
  return g;
}

Embedding embed_d_canonical(int n, CliqueKind kind) {
  if (n < 2) throw std::invalid_argument("embed_d_canonical: n >= 2 required");
  // order in which the vertices x_1..x_n of d_graph(n) are laid onto v_1..v_n
  std::vector<int> order;  // order[p] = 0-based x index placed at v_(p+1)
  switch (kind) {
    case CliqueKind::Min:
    case CliqueKind::Max:
      for (int t = 0; t < n; ++t) order.push_back(t);
      break;
    case CliqueKind::InvMin:
      order.push_back(0);
      for (int t = n - 1; t >= 1; --t) order.push_back(t);
      break;
    case CliqueKind::InvMax:
      for (int t = n - 2; t >= 0; --t) order.push_back(t);
      order.push_back(n - 1);
      break;
  }
  Embedding emb;
  emb.vertex_map.assign(n, -1);
  for (int p = 0; p < n; ++p) emb.vertex_map[order[p]] = p;

  EdgeOrderedGraph host = canonical_clique(n, kind);
  EdgeOrderedGraph pat = d_graph(n);
  for (auto [a, b] : pat.edges) {
    int u = emb.vertex_map[a], v = emb.vertex_map[b];
    if (u > v) std::swap(u, v);
    auto it = std::find(host.edges.begin(), host.edges.end(), Edge{u, v});
    emb.edge_map.push_back(static_cast<int>(it - host.edges.begin()));
  }
  if (!is_valid_embedding(host, pat, emb))
    throw std::logic_error("embed_d_canonical: stated embedding is invalid");
  return emb;
}

EdgeOrderedGraph turan_witness(int n, int r,
                               const std::vector<EdgeOrderedGraph>& family) {
  if (n < 1 || r < 2) throw std::invalid_argument("turan_witness: n >= 1, r >= 2");
  if (family.empty()) throw std::invalid_argument("turan_witness: empty family");
  int v = 0;
  for (const auto& h : family) v = std::max(v, h.n);
  int cls = std::max({(n + r - 1) / r, v, 3});

  std::optional<EdgeOrderedGraph> avoiding;
  auto stats = enumerate_canonical(
      r, cls,
      [&](const CanonicalSpec&, const EdgeOrderedGraph& g) {
        if (avoids_family(g, family)) {
          avoiding = g;
          return false;
        }
        return true;
      });
  if (stats.budget_exceeded && !avoiding)
    throw TuranWitnessError("turan_witness: enumeration budget exceeded");
  if (!avoiding)
    throw TuranWitnessError(
        "turan_witness: no canonical edge-order avoids the family "
        "(order chromatic number <= r)");

  // restrict to Turan part sizes: first n mod r parts get the extra vertex
  std::vector<int> keep;
  int q = n / r, extra = n % r;
  for (int c = 0; c < r; ++c) {
    int take = q + (c < extra ? 1 : 0);
    for (int t = 0; t < take; ++t) keep.push_back(c * cls + t);
  }
  EdgeOrderedGraph witness = induced_subgraph(*avoiding, keep);
  if (!avoids_family(witness, family))
    throw std::logic_error("turan_witness: restriction failed avoidance re-check");
  return witness;
}

}  // namespace eog
