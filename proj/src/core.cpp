#include "eog/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace eog {

bool EdgeOrderedGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::find(edges.begin(), edges.end(), Edge{u, v}) != edges.end();
}

static void check_edge_list(int n, std::vector<Edge>& edges, const char* what) {
  std::set<Edge> seen;
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u == v) throw std::invalid_argument(std::string(what) + ": self-loop");
    if (u < 0 || v >= n)
      throw std::invalid_argument(std::string(what) + ": endpoint out of range");
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument(std::string(what) + ": duplicate edge");
  }
}

EdgeOrderedGraph make_eog(int n, std::vector<Edge> edges) {
  if (n < 0) throw std::invalid_argument("make_eog: negative vertex count");
  check_edge_list(n, edges, "make_eog");
  return EdgeOrderedGraph{n, std::move(edges)};
}

SimpleGraph make_simple(int n, std::vector<Edge> edges) {
  if (n < 0) throw std::invalid_argument("make_simple: negative vertex count");
  check_edge_list(n, edges, "make_simple");
  return SimpleGraph{n, std::move(edges)};
}

SimpleGraph underlying(const EdgeOrderedGraph& g) { return SimpleGraph{g.n, g.edges}; }

EdgeOrderedGraph with_list_order(const SimpleGraph& g) {
  return EdgeOrderedGraph{g.n, g.edges};
}

bool is_bipartite(const SimpleGraph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> color(g.n, -1);
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

SidedPattern make_sided(EdgeOrderedGraph g, std::vector<Side> side,
                        std::optional<int> root) {
  if (static_cast<int>(side.size()) != g.n)
    throw std::invalid_argument("make_sided: side tag count != vertex count");
  for (auto [u, v] : g.edges)
    if (side[u] == side[v])
      throw std::invalid_argument("make_sided: edge inside one side");
  if (root && (*root < 0 || *root >= g.n))
    throw std::invalid_argument("make_sided: root out of range");
  return SidedPattern{std::move(g), std::move(side), root};
}

static void check_permutation(const std::vector<int>& perm, const char* what) {
  int k = static_cast<int>(perm.size());
  if (k < 1) throw std::invalid_argument(std::string(what) + ": empty permutation");
  std::vector<char> seen(k + 1, 0);
  for (int x : perm) {
    if (x < 1 || x > k || seen[x])
      throw std::invalid_argument(std::string(what) + ": not a permutation of 1..k");
    seen[x] = 1;
  }
}

EdgeOrderedGraph path_pattern(const std::vector<int>& perm) {
  check_permutation(perm, "path_pattern");
  int k = static_cast<int>(perm.size());
  std::vector<Edge> edges(k);
  for (int i = 0; i < k; ++i) edges[perm[i] - 1] = {i, i + 1};
  return EdgeOrderedGraph{k + 1, std::move(edges)};
}

EdgeOrderedGraph cycle_pattern(const std::vector<int>& perm) {
  check_permutation(perm, "cycle_pattern");
  int k = static_cast<int>(perm.size());
  if (k < 3) throw std::invalid_argument("cycle_pattern: need k >= 3");
  std::vector<Edge> edges(k);
  for (int i = 0; i < k; ++i) {
    int u = i, v = (i + 1) % k;
    if (u > v) std::swap(u, v);
    edges[perm[i] - 1] = {u, v};
  }
  return EdgeOrderedGraph{k, std::move(edges)};
}

SidedPattern rooted_path(const std::vector<int>& perm) {
  EdgeOrderedGraph g = path_pattern(perm);
  std::vector<Side> side(g.n);
  for (int v = 0; v < g.n; ++v) side[v] = (v % 2 == 0) ? Side::Left : Side::Right;
  return SidedPattern{std::move(g), std::move(side), 0};
}

// Canonical form: the lexicographically least serialization of the rank-ordered
// edge sequence over all vertex relabelings. In a least serialization labels
// appear in first-occurrence order 0,1,2,... (swapping an unused smaller label
// into the first occurrence of a larger one only decreases the sequence), so it
// suffices to walk the edges in rank order keeping every partial relabeling
// that still achieves the running minimum. Partial maps that agree on all
// vertices with future incident edges are interchangeable and get merged.
CanonicalKey canonical_key(const EdgeOrderedGraph& g) {
  const int n = g.n;
  const int m = g.edge_count();
  if (n > 0xff) throw std::invalid_argument("canonical_key: graph too large");
  CanonicalKey key;
  key.reserve(4 + 2 * m);
  key.push_back(static_cast<char>(n & 0xff));
  key.push_back(static_cast<char>((n >> 8) & 0xff));
  key.push_back(static_cast<char>(m & 0xff));
  key.push_back(static_cast<char>((m >> 8) & 0xff));
  if (m == 0) return key;

  // future[t] = vertices incident to some edge with index >= t
  std::vector<std::vector<int>> future(m + 1);
  {
    std::vector<char> seen(n, 0);
    for (int t = m - 1; t >= 0; --t) {
      auto [u, v] = g.edges[t];
      if (!seen[u]) seen[u] = 1;
      if (!seen[v]) seen[v] = 1;
      future[t].clear();
      for (int w = 0; w < n; ++w)
        if (seen[w]) future[t].push_back(w);
    }
  }

  using Map = std::vector<int>;  // vertex -> label or -1
  std::vector<Map> live{Map(n, -1)};
  int next = 0;

  std::vector<Map> cand;
  for (int t = 0; t < m; ++t) {
    auto [u, v] = g.edges[t];
    Edge best{0x7fffffff, 0x7fffffff};
    cand.clear();
    auto offer = [&](Edge pr, Map&& ext) {
      if (pr < best) {
        best = pr;
        cand.clear();
      }
      if (pr == best) cand.push_back(std::move(ext));
    };
    for (const Map& phi : live) {
      int mu = phi[u], mv = phi[v];
      if (mu >= 0 && mv >= 0) {
        offer({std::min(mu, mv), std::max(mu, mv)}, Map(phi));
      } else if (mu >= 0) {
        Map ext(phi);
        ext[v] = next;
        offer({mu, next}, std::move(ext));
      } else if (mv >= 0) {
        Map ext(phi);
        ext[u] = next;
        offer({mv, next}, std::move(ext));
      } else {
        Map a(phi);
        a[u] = next;
        a[v] = next + 1;
        offer({next, next + 1}, std::move(a));
        Map b(phi);
        b[u] = next + 1;
        b[v] = next;
        offer({next, next + 1}, std::move(b));
      }
    }
    key.push_back(static_cast<char>(best.first & 0xff));
    key.push_back(static_cast<char>(best.second & 0xff));
    if (best.second >= next) next = best.second + 1;

    // merge candidates whose restriction to future-relevant vertices agrees
    const std::vector<int>& rel = (t + 1 <= m) ? future[std::min(t + 1, m)] : future[m];
    std::sort(cand.begin(), cand.end(), [&](const Map& a, const Map& b) {
      for (int w : rel)
        if (a[w] != b[w]) return a[w] < b[w];
      return false;
    });
    live.clear();
    for (auto& c : cand) {
      if (!live.empty()) {
        bool same = true;
        for (int w : rel)
          if (live.back()[w] != c[w]) {
            same = false;
            break;
          }
        if (same) continue;
      }
      live.push_back(std::move(c));
    }
  }
  return key;
}

bool are_isomorphic(const EdgeOrderedGraph& a, const EdgeOrderedGraph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  return canonical_key(a) == canonical_key(b);
}

EdgeOrderedGraph reverse_order(const EdgeOrderedGraph& g) {
  EdgeOrderedGraph r = g;
  std::reverse(r.edges.begin(), r.edges.end());
  return r;
}

bool is_close(const EdgeOrderedGraph& g, int v) {
  if (v < 0 || v >= g.n) throw std::invalid_argument("is_close: vertex out of range");
  int lo = -1, hi = -1, cnt = 0;
  for (int t = 0; t < g.edge_count(); ++t) {
    if (g.edges[t].first == v || g.edges[t].second == v) {
      if (lo < 0) lo = t;
      hi = t;
      ++cnt;
    }
  }
  return cnt == 0 || hi - lo + 1 == cnt;
}

std::vector<int> close_vertices(const EdgeOrderedGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v)
    if (is_close(g, v)) out.push_back(v);
  return out;
}

std::vector<int> degrees(const EdgeOrderedGraph& g) {
  std::vector<int> deg(g.n, 0);
  for (auto [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

namespace {

struct Components {
  std::vector<int> comp;  // vertex -> component id
  int count = 0;
};

Components components_of(const EdgeOrderedGraph& g) {
  Components c;
  c.comp.assign(g.n, -1);
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (c.comp[s] != -1) continue;
    int id = c.count++;
    c.comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (c.comp[v] == -1) {
          c.comp[v] = id;
          stack.push_back(v);
        }
    }
  }
  return c;
}

}  // namespace

bool is_star_forest(const EdgeOrderedGraph& g) {
  if (g.edge_count() == 0) return false;
  Components c = components_of(g);
  std::vector<int> comp_edges(c.count, 0);
  std::vector<int> deg = degrees(g);
  for (auto [u, v] : g.edges) ++comp_edges[c.comp[u]];
  // a component is a star iff one vertex is on all of its edges
  std::vector<int> comp_maxdeg(c.count, 0);
  for (int v = 0; v < g.n; ++v)
    comp_maxdeg[c.comp[v]] = std::max(comp_maxdeg[c.comp[v]], deg[v]);
  for (int i = 0; i < c.count; ++i)
    if (comp_edges[i] > 0 && comp_maxdeg[i] != comp_edges[i]) return false;
  return true;
}

// A graph has a cycle of length >= 4 iff some biconnected block has >= 4
// vertices: cycles live inside blocks, a block on <= 3 vertices is an edge or
// a triangle, and a 2-connected graph on >= 4 vertices has such a cycle.
bool has_cycle_length_ge4(const EdgeOrderedGraph& g) {
  int n = g.n;
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
  for (int t = 0; t < g.edge_count(); ++t) {
    auto [u, v] = g.edges[t];
    adj[u].push_back({v, t});
    adj[v].push_back({u, t});
  }
  std::vector<int> num(n, -1), low(n, 0);
  std::vector<Edge> estack;
  int timer = 0;
  bool found = false;

  // iterative DFS with explicit frames
  struct Frame {
    int v, parent_edge;
    size_t i;
  };
  for (int s = 0; s < n && !found; ++s) {
    if (num[s] != -1) continue;
    std::vector<Frame> frames{{s, -1, 0}};
    num[s] = low[s] = timer++;
    while (!frames.empty() && !found) {
      Frame& f = frames.back();
      if (f.i < adj[f.v].size()) {
        auto [w, eid] = adj[f.v][f.i++];
        if (eid == f.parent_edge) continue;
        if (num[w] == -1) {
          estack.push_back({f.v, w});
          num[w] = low[w] = timer++;
          frames.push_back({w, eid, 0});
        } else if (num[w] < num[f.v]) {
          estack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (frames.empty()) break;
        int u = frames.back().v;
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= num[u]) {
          // pop the block rooted at u-v
          std::set<int> verts;
          while (!estack.empty()) {
            Edge e = estack.back();
            estack.pop_back();
            verts.insert(e.first);
            verts.insert(e.second);
            if ((e.first == u && e.second == v) || (e.first == v && e.second == u))
              break;
          }
          if (verts.size() >= 4) found = true;
        }
      }
    }
    estack.clear();
  }
  return found;
}

EdgeOrderedGraph induced_subgraph(const EdgeOrderedGraph& g,
                                  const std::vector<int>& vertices) {
  std::vector<int> index(g.n, -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.n)
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (index[v] != -1)
      throw std::invalid_argument("induced_subgraph: repeated vertex");
    index[v] = static_cast<int>(i);
  }
  EdgeOrderedGraph out;
  out.n = static_cast<int>(vertices.size());
  for (auto [u, v] : g.edges) {
    if (index[u] >= 0 && index[v] >= 0) {
      int a = index[u], b = index[v];
      if (a > b) std::swap(a, b);
      out.edges.push_back({a, b});
    }
  }
  return out;
}

EdgeOrderedGraph parse_eog(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> data;
  while (std::getline(in, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    data.push_back(line);
  }
  if (data.empty()) throw ParseError("parse_eog: malformed header: empty input");
  std::istringstream head(data[0]);
  long long n = 0, m = 0;
  std::string junk;
  if (!(head >> n >> m) || (head >> junk) || n < 0 || m < 0)
    throw ParseError("parse_eog: malformed header: expected 'n m'");
  if (static_cast<long long>(data.size()) - 1 != m)
    throw ParseError("parse_eog: malformed header: edge line count mismatch");
  std::vector<Edge> edges;
  std::vector<double> labels;
  std::set<Edge> seen;
  bool labeled = false;
  for (long long t = 0; t < m; ++t) {
    std::istringstream es(data[1 + t]);
    long long u = 0, v = 0;
    double label = 0;
    if (!(es >> u >> v))
      throw ParseError("parse_eog: malformed edge line: expected 'u v'");
    bool has_label = static_cast<bool>(es >> label);
    if (es >> junk)
      throw ParseError("parse_eog: malformed edge line: expected 'u v [label]'");
    if (t == 0) labeled = has_label;
    if (has_label != labeled)
      throw ParseError("parse_eog: malformed edge line: mixed labeled and plain lines");
    if (u == v) throw ParseError("parse_eog: self-loop");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw ParseError("parse_eog: endpoint out of range");
    Edge e{static_cast<int>(u), static_cast<int>(v)};
    if (!seen.insert(e).second) throw ParseError("parse_eog: duplicate edge");
    edges.push_back(e);
    labels.push_back(label);
  }
  if (labeled) {
    // explicit real labels define the order; ties have no meaning and are
    // rejected rather than broken
    std::vector<int> idx(edges.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return labels[a] < labels[b]; });
    for (size_t i = 1; i < idx.size(); ++i)
      if (labels[idx[i - 1]] == labels[idx[i]])
        throw ParseError("parse_eog: duplicate label");
    std::vector<Edge> ordered;
    for (int i : idx) ordered.push_back(edges[i]);
    edges = std::move(ordered);
  }
  return EdgeOrderedGraph{static_cast<int>(n), std::move(edges)};
}

std::string serialize_eog(const EdgeOrderedGraph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

std::string serialize_eog(const SidedPattern& host) {
  std::ostringstream out;
  out << "# sides ";
  for (Side s : host.side) out << (s == Side::Left ? 'L' : 'R');
  if (host.root) out << "\n# root " << *host.root;
  out << '\n' << serialize_eog(host.graph);
  return out.str();
}

}  // namespace eog
