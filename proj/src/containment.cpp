#include "eog/containment.hpp"

#include <algorithm>

namespace eog {

namespace {

// Backtracking embedder: pattern edges are mapped in increasing rank order to
// host edges in increasing rank order. Candidates are scanned in ascending
// host rank, so the first complete solution has the lexicographically least
// edge_map.
struct Embedder {
  const EdgeOrderedGraph& host;
  const EdgeOrderedGraph& pat;
  bool force_last;
  const std::function<bool(int, int)>* vertex_ok;  // (pat vertex, host vertex)

  std::vector<int> host_deg, pat_deg;
  std::vector<int> vmap;    // pattern vertex -> host vertex or -1
  std::vector<char> used;   // host vertex already an image
  std::vector<int> emap;

  Embedder(const EdgeOrderedGraph& h, const EdgeOrderedGraph& p, bool fl,
           const std::function<bool(int, int)>* vok)
      : host(h), pat(p), force_last(fl), vertex_ok(vok) {
    host_deg = degrees(h);
    pat_deg = degrees(p);
    vmap.assign(p.n, -1);
    used.assign(h.n, 0);
    emap.reserve(p.edge_count());
  }

  bool assign(int pv, int hv) {
    if (vmap[pv] != -1) return vmap[pv] == hv;
    if (used[hv]) return false;
    if (host_deg[hv] < pat_deg[pv]) return false;
    if (vertex_ok && !(*vertex_ok)(pv, hv)) return false;
    vmap[pv] = hv;
    used[hv] = 1;
    return true;
  }

  bool try_edge(int pe, int j, int pu, int pv, int hu, int hv) {
    bool new_u = vmap[pu] == -1;
    if (!assign(pu, hu)) return false;
    bool new_v = vmap[pv] == -1;
    if (!assign(pv, hv)) {
      if (new_u) {
        used[hu] = 0;
        vmap[pu] = -1;
      }
      return false;
    }
    emap.push_back(j);
    if (dfs(pe + 1, j + 1)) return true;
    emap.pop_back();
    if (new_v) {
      used[vmap[pv]] = 0;
      vmap[pv] = -1;
    }
    if (new_u) {
      used[vmap[pu]] = 0;
      vmap[pu] = -1;
    }
    return false;
  }

  bool finish_isolated() {
    // map untouched pattern vertices (isolated ones) to free host vertices;
    // most-constrained first, so the single rooted constraint cannot starve
    std::vector<int> todo;
    for (int pv = 0; pv < pat.n; ++pv)
      if (vmap[pv] == -1) todo.push_back(pv);
    if (vertex_ok) {
      std::vector<int> opts(pat.n, 0);
      for (int pv : todo)
        for (int hv = 0; hv < host.n; ++hv)
          if (!used[hv] && (*vertex_ok)(pv, hv)) ++opts[pv];
      std::sort(todo.begin(), todo.end(),
                [&](int a, int b) { return opts[a] < opts[b]; });
    }
    for (int pv : todo) {
      bool placed = false;
      for (int hv = 0; hv < host.n; ++hv) {
        if (used[hv]) continue;
        if (vertex_ok && !(*vertex_ok)(pv, hv)) continue;
        vmap[pv] = hv;
        used[hv] = 1;
        placed = true;
        break;
      }
      if (!placed) return false;
    }
    return true;
  }

  void undo_isolated(const std::vector<char>& before) {
    for (int pv = 0; pv < pat.n; ++pv)
      if (vmap[pv] != -1 && !before[pv]) {
        used[vmap[pv]] = 0;
        vmap[pv] = -1;
      }
  }

  bool dfs(int pe, int jmin) {
    int pm = pat.edge_count();
    if (pe == pm) {
      std::vector<char> before(pat.n, 0);
      for (int pv = 0; pv < pat.n; ++pv) before[pv] = vmap[pv] != -1;
      if (finish_isolated()) return true;
      undo_isolated(before);
      return false;
    }
    int hm = host.edge_count();
    int jmax = hm - (pm - pe);  // leave room for the remaining pattern edges
    if (force_last && pe == pm - 1) jmin = std::max(jmin, hm - 1);
    auto [pu, pv] = pat.edges[pe];
    for (int j = jmin; j <= jmax; ++j) {
      auto [hu, hv] = host.edges[j];
      if (try_edge(pe, j, pu, pv, hu, hv)) return true;
      if (try_edge(pe, j, pu, pv, hv, hu)) return true;
    }
    return false;
  }
};

std::optional<Embedding> run(const EdgeOrderedGraph& host,
                             const EdgeOrderedGraph& pattern, bool force_last,
                             const std::function<bool(int, int)>* vertex_ok) {
  if (pattern.edge_count() == 0)
    throw std::invalid_argument("contains: pattern must have at least one edge");
  if (host.n < pattern.n || host.edge_count() < pattern.edge_count())
    return std::nullopt;
  Embedder e(host, pattern, force_last, vertex_ok);
  if (!e.dfs(0, 0)) return std::nullopt;
  return Embedding{std::move(e.vmap), std::move(e.emap)};
}

}  // namespace

std::optional<Embedding> contains(const EdgeOrderedGraph& host,
                                  const EdgeOrderedGraph& pattern) {
  return run(host, pattern, false, nullptr);
}

std::optional<Embedding> contains_with_last_edge(const EdgeOrderedGraph& host,
                                                 const EdgeOrderedGraph& pattern) {
  return run(host, pattern, true, nullptr);
}

bool avoids_family(const EdgeOrderedGraph& host,
                   const std::vector<EdgeOrderedGraph>& family) {
  for (const auto& h : family)
    if (contains(host, h)) return false;
  return true;
}

bool hits_family_with_last_edge(const EdgeOrderedGraph& host,
                                const std::vector<EdgeOrderedGraph>& family) {
  for (const auto& h : family)
    if (contains_with_last_edge(host, h)) return true;
  return false;
}

std::optional<Embedding> side_contains(const SidedPattern& host,
                                       const SidedPattern& pattern, Side mode) {
  if (!pattern.root)
    throw std::invalid_argument("side_contains: pattern must be rooted");
  int root = *pattern.root;
  std::function<bool(int, int)> ok = [&](int pv, int hv) {
    return pv != root || host.side[hv] == mode;
  };
  return run(host.graph, pattern.graph, false, &ok);
}

bool is_valid_embedding(const EdgeOrderedGraph& host,
                        const EdgeOrderedGraph& pattern, const Embedding& emb) {
  if (static_cast<int>(emb.vertex_map.size()) != pattern.n) return false;
  if (static_cast<int>(emb.edge_map.size()) != pattern.edge_count()) return false;
  std::vector<char> used(host.n, 0);
  for (int hv : emb.vertex_map) {
    if (hv < 0 || hv >= host.n || used[hv]) return false;
    used[hv] = 1;
  }
  int prev = -1;
  for (int t = 0; t < pattern.edge_count(); ++t) {
    int j = emb.edge_map[t];
    if (j <= prev || j >= host.edge_count()) return false;
    prev = j;
    auto [pu, pv] = pattern.edges[t];
    int a = emb.vertex_map[pu], b = emb.vertex_map[pv];
    if (a > b) std::swap(a, b);
    if (host.edges[j] != Edge{a, b}) return false;
  }
  return true;
}

}  // namespace eog
