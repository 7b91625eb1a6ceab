#include "eog/orderchrom.hpp"

#include "eog/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace eog {

std::string ChiResult::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Exactly: out << "exactly " << k; break;
    case Kind::ExceedsBudget: out << "exceeds-budget " << k; break;
    case Kind::Infinite: out << "infinite"; break;
  }
  return out.str();
}

bool chi_less(const ChiResult& a, const ChiResult& b) {
  auto level = [](const ChiResult& r) {
    switch (r.kind) {
      case ChiResult::Kind::Exactly: return 0;
      case ChiResult::Kind::ExceedsBudget: return 1;
      case ChiResult::Kind::Infinite: return 2;
    }
    return 2;
  };
  if (level(a) != level(b)) return level(a) < level(b);
  return a.k < b.k;
}

static void check_family(const Family& family) {
  if (family.empty()) throw std::invalid_argument("family must be non-empty");
  for (const auto& h : family)
    if (h.edge_count() == 0)
      throw std::invalid_argument("family members must have at least one edge");
}

static int max_vertex_count(const Family& family) {
  int v = 0;
  for (const auto& h : family) v = std::max(v, h.n);
  return v;
}

bool is_chi_two(const EdgeOrderedGraph& h) {
  if (h.edge_count() == 0)
    throw std::invalid_argument("is_chi_two: pattern must have at least one edge");
  return contains(knn_can(h.n).graph, h).has_value();
}

bool is_chi_infinite(const Family& family) {
  check_family(family);
  int v = max_vertex_count(family);
  for (CliqueKind kind : kAllCliqueKinds)
    if (avoids_family(canonical_clique(v, kind), family)) return true;
  return false;
}

Decision chi_exceeds(const Family& family, int k, std::uint64_t max_specs) {
  check_family(family);
  if (k < 2) throw std::invalid_argument("chi_exceeds: k >= 2 required");
  int v = max_vertex_count(family);
  int cls = (k == 2) ? v : std::max(v, 3);
  bool found = false;
  auto stats = enumerate_canonical(
      k, cls,
      [&](const CanonicalSpec&, const EdgeOrderedGraph& g) {
        if (avoids_family(g, family)) {
          found = true;
          return false;
        }
        return true;
      },
      max_specs);
  if (found) return Decision::True;
  if (stats.budget_exceeded) return Decision::Budget;
  return Decision::False;
}

ChiResult order_chromatic(const Family& family, int kmax, std::uint64_t max_specs) {
  check_family(family);
  if (kmax < 2) throw std::invalid_argument("order_chromatic: kmax >= 2 required");
  if (is_chi_infinite(family)) return ChiResult::infinite();
  for (int k = 2; k <= kmax; ++k) {
    switch (chi_exceeds(family, k, max_specs)) {
      case Decision::False: return ChiResult::exactly(k);
      case Decision::Budget: return ChiResult::exceeds_budget(k - 1);
      case Decision::True: break;
    }
  }
  return ChiResult::exceeds_budget(kmax);
}

bool has_close_class_2coloring(const EdgeOrderedGraph& h) {
  // proper 2-colorings of a component differ only by swapping the classes,
  // so a valid choice exists iff each component has an all-close side
  std::vector<std::vector<int>> adj(h.n);
  for (auto [u, v] : h.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> color(h.n, -1);
  std::vector<int> stack;
  for (int s = 0; s < h.n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    std::vector<int> comp{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          comp.push_back(v);
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;  // odd cycle
        }
      }
    }
    bool side_ok[2] = {true, true};
    for (int v : comp)
      if (!is_close(h, v)) side_ok[color[v]] = false;
    if (!side_ok[0] && !side_ok[1]) return false;
  }
  return true;
}

SimpleGraph auxiliary_graph(const EdgeOrderedGraph& complete, int x) {
  int n = complete.n;
  if (complete.edge_count() != n * (n - 1) / 2)
    throw std::invalid_argument("auxiliary_graph: host must be a complete graph");
  if (x < 0 || x >= n)
    throw std::invalid_argument("auxiliary_graph: vertex out of range");
  std::vector<std::vector<int>> rank(n, std::vector<int>(n, -1));
  for (int t = 0; t < complete.edge_count(); ++t) {
    auto [u, v] = complete.edges[t];
    rank[u][v] = rank[v][u] = t;
  }
  SimpleGraph g;
  g.n = n;
  for (int y = 0; y < n; ++y) {
    if (y == x) continue;
    for (int z = y + 1; z < n; ++z) {
      if (z == x) continue;
      int a = rank[x][y], b = rank[y][z], c = rank[x][z];
      if ((a < b && b < c) || (c < b && b < a)) g.edges.push_back({y, z});
    }
  }
  return g;
}

bool dialemma_check(const EdgeOrderedGraph& complete, int dn) {
  if (dn < 2) throw std::invalid_argument("dialemma_check: n >= 2 required");
  if (contains(complete, d_graph(dn))) return false;
  for (int x = 0; x < complete.n; ++x)
    if (!is_bipartite(auxiliary_graph(complete, x))) return false;
  return true;
}

LabelingScanReport labeling_scan(const EdgeOrderedGraph& shape, int kmax,
                                 int max_edges, std::uint64_t max_specs) {
  int m = shape.edge_count();
  if (m == 0) throw std::invalid_argument("labeling_scan: shape has no edges");
  if (m > max_edges)
    throw std::invalid_argument("labeling_scan: too many edges for the guard");
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<CanonicalKey, EdgeOrderedGraph> classes;
  do {
    EdgeOrderedGraph g;
    g.n = shape.n;
    g.edges.resize(m);
    for (int t = 0; t < m; ++t) g.edges[t] = shape.edges[perm[t]];
    classes.try_emplace(canonical_key(g), g);
  } while (std::next_permutation(perm.begin(), perm.end()));

  LabelingScanReport report;
  for (auto& [key, g] : classes) {
    ChiResult chi = order_chromatic({g}, kmax, max_specs);
    report.classes.push_back({std::move(g), chi});
  }
  report.chi_minus = report.classes.front().chi;
  report.chi_plus = report.classes.front().chi;
  for (const auto& c : report.classes) {
    if (chi_less(c.chi, report.chi_minus)) report.chi_minus = c.chi;
    if (chi_less(report.chi_plus, c.chi)) report.chi_plus = c.chi;
  }
  return report;
}

}  // namespace eog
