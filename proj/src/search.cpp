#include "eog/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <list>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

namespace eog {

namespace {

using Clock = std::chrono::steady_clock;

// Size-capped set of canonical keys with least-recently-used eviction.
class KeyTable {
 public:
  explicit KeyTable(std::size_t capacity) : capacity_(std::max<std::size_t>(capacity, 16)) {}

  // true when the key was absent (and is now recorded)
  bool insert(const CanonicalKey& key) {
    auto it = index_.find(key);
    if (it != index_.end()) {
      order_.splice(order_.begin(), order_, it->second);
      return false;
    }
    order_.push_front(key);
    index_[key] = order_.begin();
    if (index_.size() > capacity_) {
      index_.erase(order_.back());
      order_.pop_back();
    }
    return true;
  }

 private:
  std::size_t capacity_;
  std::list<CanonicalKey> order_;
  std::unordered_map<CanonicalKey, std::list<CanonicalKey>::iterator> index_;
};

struct SharedState {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  Clock::time_point deadline;
  std::uint64_t max_nodes = 0;

  std::atomic<int> best_value{0};
  std::mutex best_mutex;
  EdgeOrderedGraph best_witness;

  void offer(const EdgeOrderedGraph& g) {
    int v = g.edge_count();
    if (v <= best_value.load(std::memory_order_relaxed)) return;
    std::lock_guard<std::mutex> lock(best_mutex);
    if (v > best_value.load(std::memory_order_relaxed)) {
      best_value.store(v, std::memory_order_relaxed);
      best_witness = g;
    }
  }

  bool tick() {
    std::uint64_t c = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (c > max_nodes) {
      aborted.store(true, std::memory_order_relaxed);
      return false;
    }
    if ((c & 1023) == 0 && Clock::now() > deadline) {
      aborted.store(true, std::memory_order_relaxed);
      return false;
    }
    return !aborted.load(std::memory_order_relaxed);
  }
};

struct LexWorker {
  int n;
  const std::vector<EdgeOrderedGraph>& family;
  SharedState& shared;
  KeyTable table;

  LexWorker(int n_, const std::vector<EdgeOrderedGraph>& fam, SharedState& sh,
            std::size_t table_capacity)
      : n(n_), family(fam), shared(sh), table(table_capacity) {}

  void dfs(EdgeOrderedGraph& state, std::vector<char>& present) {
    if (!shared.tick()) return;
    shared.offer(state);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (present[u * n + v]) continue;
        state.edges.push_back({u, v});
        present[u * n + v] = 1;
        if (!hits_family_with_last_edge(state, family) &&
            table.insert(canonical_key(state)))
          dfs(state, present);
        present[u * n + v] = 0;
        state.edges.pop_back();
        if (shared.aborted.load(std::memory_order_relaxed)) return;
      }
  }
};

}  // namespace

LexResult lex_exact(int n, const std::vector<EdgeOrderedGraph>& family,
                    const SearchBudget& budget) {
  if (n < 1) throw std::invalid_argument("lex_exact: n >= 1 required");
  if (family.empty()) throw std::invalid_argument("lex_exact: empty family");
  for (const auto& h : family)
    if (h.edge_count() == 0)
      throw std::invalid_argument("lex_exact: family members must be non-empty");

  SharedState shared;
  shared.max_nodes = budget.max_nodes;
  shared.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(budget.seconds));
  EdgeOrderedGraph empty;
  empty.n = n;
  shared.best_witness = empty;

  int threads = std::max(1, budget.threads);
  if (threads == 1) {
    LexWorker worker(n, family, shared, budget.table_capacity);
    std::vector<char> present(n * n, 0);
    EdgeOrderedGraph state = empty;
    worker.dfs(state, present);
  } else {
    // breadth-first expansion until the frontier is wide enough to split
    std::vector<EdgeOrderedGraph> frontier{empty};
    KeyTable seen(budget.table_capacity);
    seen.insert(canonical_key(empty));
    shared.offer(empty);
    while (static_cast<int>(frontier.size()) < 4 * threads && !frontier.empty()) {
      std::vector<EdgeOrderedGraph> next;
      for (const auto& g : frontier) {
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            EdgeOrderedGraph child = g;
            child.edges.push_back({u, v});
            if (hits_family_with_last_edge(child, family)) continue;
            if (!seen.insert(canonical_key(child))) continue;
            shared.offer(child);
            next.push_back(std::move(child));
          }
      }
      if (next.empty()) break;
      frontier = std::move(next);
      bool deep_enough = frontier.front().edge_count() >= n;  // keep levels cheap
      if (deep_enough) break;
    }
    std::atomic<size_t> cursor{0};
    auto run = [&]() {
      LexWorker worker(n, family, shared, budget.table_capacity / threads);
      for (;;) {
        size_t i = cursor.fetch_add(1);
        if (i >= frontier.size()) break;
        EdgeOrderedGraph state = frontier[i];
        std::vector<char> present(n * n, 0);
        for (auto [u, v] : state.edges) present[u * n + v] = 1;
        worker.dfs(state, present);
        if (shared.aborted.load()) break;
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }

  LexResult result;
  result.value = shared.best_value.load();
  result.witness = shared.best_witness;
  result.exact = !shared.aborted.load();
  result.nodes = shared.nodes.load();
  if (!avoids_family(result.witness, family))
    throw std::logic_error("lex_exact: witness failed avoidance re-check");
  return result;
}

namespace {

std::vector<std::vector<int>> graph_automorphisms(const SimpleGraph& g) {
  std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
  for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> autos;
  do {
    bool ok = true;
    for (int u = 0; u < g.n && ok; ++u)
      for (int v = u + 1; v < g.n && ok; ++v)
        if (adj[u][v] != adj[perm[u]][perm[v]]) ok = false;
    if (ok) autos.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return autos;
}

struct AvoidSearch {
  const std::vector<Edge>& pool;  // underlying edges in fixed order
  const std::vector<EdgeOrderedGraph>& family;
  const std::vector<std::vector<int>>& autos;
  int n;
  std::set<std::vector<Edge>> visited;
  EdgeOrderedGraph state;
  std::vector<char> used;

  // least image of the current prefix under the automorphism group
  std::vector<Edge> prefix_key() const {
    std::vector<Edge> best;
    std::vector<Edge> cur(state.edges.size());
    for (const auto& sigma : autos) {
      for (size_t t = 0; t < state.edges.size(); ++t) {
        int u = sigma[state.edges[t].first], v = sigma[state.edges[t].second];
        if (u > v) std::swap(u, v);
        cur[t] = {u, v};
      }
      if (best.empty() || cur < best) best = cur;
    }
    return best;
  }

  bool dfs() {
    if (state.edge_count() == static_cast<int>(pool.size())) return true;
    for (size_t e = 0; e < pool.size(); ++e) {
      if (used[e]) continue;
      used[e] = 1;
      state.edges.push_back(pool[e]);
      bool viable = !hits_family_with_last_edge(state, family);
      if (viable && visited.insert(prefix_key()).second && dfs()) return true;
      state.edges.pop_back();
      used[e] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<EdgeOrderedGraph> can_avoid(
    const EdgeOrderedGraph& shape, const std::vector<EdgeOrderedGraph>& family,
    int max_edges, int max_vertices) {
  if (family.empty()) throw std::invalid_argument("can_avoid: empty family");
  for (const auto& h : family)
    if (h.edge_count() == 0)
      throw std::invalid_argument("can_avoid: family members must be non-empty");
  if (shape.edge_count() > max_edges || shape.n > max_vertices)
    throw std::invalid_argument("can_avoid: shape too large for the guard");

  SimpleGraph ug = underlying(shape);
  auto autos = graph_automorphisms(ug);
  AvoidSearch search{ug.edges, family, autos, shape.n, {}, {}, {}};
  search.state.n = shape.n;
  search.used.assign(ug.edges.size(), 0);
  if (!search.dfs()) return std::nullopt;
  if (!avoids_family(search.state, family))
    throw std::logic_error("can_avoid: result failed avoidance re-check");
  return search.state;
}

namespace {

bool simple_subgraph(const std::vector<std::vector<char>>& adj, int n,
                     const SimpleGraph& h, std::vector<int>& vmap,
                     std::vector<char>& used, int pv) {
  if (pv == h.n) return true;
  for (int hv = 0; hv < n; ++hv) {
    if (used[hv]) continue;
    bool ok = true;
    for (auto [a, b] : h.edges) {
      if (a == pv && vmap[b] != -1 && !adj[hv][vmap[b]]) ok = false;
      if (b == pv && vmap[a] != -1 && !adj[hv][vmap[a]]) ok = false;
      if (!ok) break;
    }
    if (!ok) continue;
    vmap[pv] = hv;
    used[hv] = 1;
    if (simple_subgraph(adj, n, h, vmap, used, pv + 1)) return true;
    used[hv] = 0;
    vmap[pv] = -1;
  }
  return false;
}

}  // namespace

int ex_exact(int n, const SimpleGraph& h) {
  if (n < 1) throw std::invalid_argument("ex_exact: n >= 1 required");
  if (h.edge_count() == 0) return 0;
  if (n > 7) throw std::invalid_argument("ex_exact: n too large for the guard");
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  int total = static_cast<int>(pairs.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
    int count = std::popcount(mask);
    if (count <= best) continue;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int i = 0; i < total; ++i)
      if ((mask >> i) & 1) {
        adj[pairs[i].first][pairs[i].second] = 1;
        adj[pairs[i].second][pairs[i].first] = 1;
      }
    std::vector<int> vmap(h.n, -1);
    std::vector<char> used(n, 0);
    bool has_h = h.n <= n && simple_subgraph(adj, n, h, vmap, used, 0);
    if (!has_h) best = count;
  }
  return best;
}

}  // namespace eog
