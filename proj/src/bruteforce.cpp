#include "eog/bruteforce.hpp"

#include <algorithm>
#include <numeric>

namespace eog::bruteforce {

namespace {

bool extend(const EdgeOrderedGraph& host, const EdgeOrderedGraph& pat,
            std::vector<int>& vmap, std::vector<char>& used, int pv) {
  if (pv == pat.n) {
    int prev = -1;
    for (auto [a, b] : pat.edges) {
      int u = vmap[a], v = vmap[b];
      if (u > v) std::swap(u, v);
      auto it = std::find(host.edges.begin(), host.edges.end(), Edge{u, v});
      if (it == host.edges.end()) return false;
      int j = static_cast<int>(it - host.edges.begin());
      if (j <= prev) return false;
      prev = j;
    }
    return true;
  }
  for (int hv = 0; hv < host.n; ++hv) {
    if (used[hv]) continue;
    vmap[pv] = hv;
    used[hv] = 1;
    if (extend(host, pat, vmap, used, pv + 1)) return true;
    used[hv] = 0;
    vmap[pv] = -1;
  }
  return false;
}

}  // namespace

std::optional<Embedding> contains_naive(const EdgeOrderedGraph& host,
                                        const EdgeOrderedGraph& pattern) {
  if (pattern.edge_count() == 0)
    throw std::invalid_argument("contains_naive: empty pattern");
  if (host.n < pattern.n) return std::nullopt;
  std::vector<int> vmap(pattern.n, -1);
  std::vector<char> used(host.n, 0);
  if (!extend(host, pattern, vmap, used, 0)) return std::nullopt;
  Embedding emb;
  emb.vertex_map = vmap;
  for (auto [a, b] : pattern.edges) {
    int u = vmap[a], v = vmap[b];
    if (u > v) std::swap(u, v);
    auto it = std::find(host.edges.begin(), host.edges.end(), Edge{u, v});
    emb.edge_map.push_back(static_cast<int>(it - host.edges.begin()));
  }
  return emb;
}

bool isomorphic_naive(const EdgeOrderedGraph& a, const EdgeOrderedGraph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int t = 0; t < a.edge_count() && ok; ++t) {
      int u = perm[a.edges[t].first], v = perm[a.edges[t].second];
      if (u > v) std::swap(u, v);
      ok = b.edges[t] == Edge{u, v};
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - (k - i)) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool matrix_contains_naive(const ZeroOnePattern& m, const ZeroOnePattern& p) {
  if (p.rows > m.rows || p.cols > m.cols) return false;
  auto has_one = [&](int r, int c) {
    return std::find(m.ones.begin(), m.ones.end(), std::pair{r, c}) != m.ones.end();
  };
  std::vector<int> rs(p.rows), cs0(p.cols);
  std::iota(rs.begin(), rs.end(), 0);
  do {
    std::vector<int> cs = cs0;
    std::iota(cs.begin(), cs.end(), 0);
    do {
      bool ok = true;
      for (auto [r, c] : p.ones)
        if (!has_one(rs[r], cs[c])) {
          ok = false;
          break;
        }
      if (ok) return true;
    } while (next_combination(cs, m.cols));
  } while (next_combination(rs, m.rows));
  return false;
}

namespace {

bool cycle_dfs(const std::vector<std::vector<int>>& adj, std::vector<char>& onpath,
               int start, int u, int len) {
  for (int v : adj[u]) {
    if (v == start && len >= 4) return true;
    if (!onpath[v] && v > start) {  // enumerate each cycle from its least vertex
      onpath[v] = 1;
      if (cycle_dfs(adj, onpath, start, v, len + 1)) return true;
      onpath[v] = 0;
    }
  }
  return false;
}

}  // namespace

bool has_long_cycle_naive(const SimpleGraph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> onpath(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    onpath[s] = 1;
    if (cycle_dfs(adj, onpath, s, s, 1)) return true;
    onpath[s] = 0;
  }
  return false;
}

}  // namespace eog::bruteforce
