#include "eog/canonical.hpp"

#include <algorithm>
#include <sstream>

namespace eog {

const char* to_string(CliqueKind kind) {
  switch (kind) {
    case CliqueKind::Min: return "min";
    case CliqueKind::Max: return "max";
    case CliqueKind::InvMin: return "inv_min";
    case CliqueKind::InvMax: return "inv_max";
  }
  return "?";
}

EdgeOrderedGraph canonical_clique(int n, CliqueKind kind) {
  if (n < 1) throw std::invalid_argument("canonical_clique: n >= 1 required");
  std::vector<std::pair<long long, Edge>> labeled;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      long long label = 0;
      long long N = n;
      switch (kind) {
        case CliqueKind::Min: label = N * i + j; break;
        case CliqueKind::Max: label = N * j + i; break;
        case CliqueKind::InvMin: label = N * i - j; break;
        case CliqueKind::InvMax: label = N * j - i; break;
      }
      labeled.push_back({label, {i - 1, j - 1}});
    }
  std::sort(labeled.begin(), labeled.end());
  EdgeOrderedGraph g;
  g.n = n;
  for (auto& [label, e] : labeled) g.edges.push_back(e);
  return g;
}

SidedPattern knn_can(int n) {
  if (n < 1) throw std::invalid_argument("knn_can: n >= 1 required");
  EdgeOrderedGraph g;
  g.n = 2 * n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) g.edges.push_back({i - 1, n + j - 1});
  std::vector<Side> side(2 * n, Side::Right);
  for (int i = 0; i < n; ++i) side[i] = Side::Left;
  return SidedPattern{std::move(g), std::move(side), std::nullopt};
}

int multipartite_vertex(int k, int n, int cls, int idx) {
  (void)k;
  return cls * n + idx;
}

namespace {

// The eight canonical index formulas for a part between classes a < b:
// j1 is the index within a, j2 the index within b, both 1-based.
long long part_label(int which, int n, int j1, int j2) {
  long long N = n;
  switch (which) {
    case 0: return N * j1 + j2;
    case 1: return N * j1 - j2;
    case 2: return -N * j1 + j2;
    case 3: return -N * j1 - j2;
    case 4: return N * j2 + j1;
    case 5: return N * j2 - j1;
    case 6: return -N * j2 + j1;
    case 7: return -N * j2 - j1;
  }
  throw std::invalid_argument("part_label: bad labeling index");
}

struct MultipartiteContext {
  int k = 0, n = 0;
  int part_count = 0, pair_count = 0, edge_count = 0;
  std::vector<std::pair<int, int>> parts;       // class pairs, lexicographic
  std::vector<std::pair<int, int>> part_pairs;  // part id pairs, lexicographic
  std::vector<int> pair_shared;                 // shared class or -1

  struct EdgeInfo {
    int c1, t1, c2, t2;  // classes and 0-based in-class indices, c1 < c2
    int part;
    int lab_idx;  // (t1)*n + t2, for the labeling tables
  };
  std::vector<EdgeInfo> edge_info;
  std::vector<std::vector<long long>> labtab;  // [8][n*n]

  struct PairDesc {
    int e, f;
    bool same_part;
    int part_or_pair;
    int e_lab, f_lab;
    int piv_first, piv_second;  // in-class pivot indices for interleaves
    bool e_is_first;
  };
  std::vector<PairDesc> pair_descs;

  MultipartiteContext(int k_, int n_) : k(k_), n(n_) {
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) parts.push_back({a, b});
    part_count = static_cast<int>(parts.size());
    for (int p = 0; p < part_count; ++p)
      for (int q = p + 1; q < part_count; ++q) {
        part_pairs.push_back({p, q});
        auto [a1, b1] = parts[p];
        auto [a2, b2] = parts[q];
        int shared = -1;
        if (a1 == a2 || a1 == b2) shared = a1;
        if (b1 == a2 || b1 == b2) shared = b1;
        pair_shared.push_back(shared);
      }
    pair_count = static_cast<int>(part_pairs.size());

    for (int p = 0; p < part_count; ++p) {
      auto [a, b] = parts[p];
      for (int t1 = 0; t1 < n; ++t1)
        for (int t2 = 0; t2 < n; ++t2)
          edge_info.push_back({a, t1, b, t2, p, t1 * n + t2});
    }
    edge_count = static_cast<int>(edge_info.size());

    labtab.assign(8, std::vector<long long>(n * n));
    for (int l = 0; l < 8; ++l)
      for (int t1 = 0; t1 < n; ++t1)
        for (int t2 = 0; t2 < n; ++t2)
          labtab[l][t1 * n + t2] = part_label(l, n, t1 + 1, t2 + 1);

    std::vector<std::vector<int>> pair_index(part_count,
                                             std::vector<int>(part_count, -1));
    for (int pi = 0; pi < pair_count; ++pi) {
      pair_index[part_pairs[pi].first][part_pairs[pi].second] = pi;
      pair_index[part_pairs[pi].second][part_pairs[pi].first] = pi;
    }

    auto pivot = [&](const EdgeInfo& e, int cls) {
      return e.c1 == cls ? e.t1 : e.t2;
    };
    for (int e = 0; e < edge_count; ++e)
      for (int f = e + 1; f < edge_count; ++f) {
        const EdgeInfo& ei = edge_info[e];
        const EdgeInfo& fi = edge_info[f];
        PairDesc d{};
        d.e = e;
        d.f = f;
        if (ei.part == fi.part) {
          d.same_part = true;
          d.part_or_pair = ei.part;
          d.e_lab = ei.lab_idx;
          d.f_lab = fi.lab_idx;
        } else {
          d.same_part = false;
          int pi = pair_index[ei.part][fi.part];
          d.part_or_pair = pi;
          d.e_is_first = ei.part < fi.part;
          int shared = pair_shared[pi];
          if (shared >= 0) {
            const EdgeInfo& first = d.e_is_first ? ei : fi;
            const EdgeInfo& second = d.e_is_first ? fi : ei;
            d.piv_first = pivot(first, shared);
            d.piv_second = pivot(second, shared);
          }
        }
        pair_descs.push_back(d);
      }
  }

  // Scores each edge by the number of edges it precedes. The relation is a
  // linear order iff the scores are pairwise distinct.
  bool realize(const std::vector<int>& lab, const std::vector<int>& rel,
               std::vector<int>& score, EdgeOrderedGraph& out) const {
    score.assign(edge_count, 0);
    for (const PairDesc& d : pair_descs) {
      bool e_less;
      if (d.same_part) {
        const auto& lv = labtab[lab[d.part_or_pair]];
        e_less = lv[d.e_lab] < lv[d.f_lab];
      } else {
        bool first_less = false;
        switch (rel[d.part_or_pair]) {
          case kFirstPrecedes: first_less = true; break;
          case kSecondPrecedes: first_less = false; break;
          case kInterleaveLt: first_less = d.piv_first < d.piv_second; break;
          case kInterleaveLe: first_less = d.piv_first <= d.piv_second; break;
          case kInterleaveGt: first_less = d.piv_first > d.piv_second; break;
          case kInterleaveGe: first_less = d.piv_first >= d.piv_second; break;
          default: throw std::invalid_argument("realize: bad pair relation");
        }
        e_less = d.e_is_first ? first_less : !first_less;
      }
      ++score[e_less ? d.e : d.f];
    }
    std::vector<char> seen(edge_count, 0);
    for (int s : score) {
      if (seen[s]) return false;
      seen[s] = 1;
    }
    out.n = k * n;
    out.edges.assign(edge_count, {0, 0});
    for (int e = 0; e < edge_count; ++e) {
      const EdgeInfo& ei = edge_info[e];
      out.edges[edge_count - 1 - score[e]] = {ei.c1 * n + ei.t1, ei.c2 * n + ei.t2};
    }
    return true;
  }
};

void check_kn(int k, int n) {
  if (k < 2) throw std::invalid_argument("enumerate_canonical: k >= 2 required");
  if (n < 2) throw std::invalid_argument("enumerate_canonical: n >= 2 required");
  if (k >= 4 && n == 2)
    throw std::invalid_argument(
        "enumerate_canonical: class size 2 is not supported for k >= 4");
}

}  // namespace

std::string CanonicalSpec::to_string() const {
  static const char* rel_names[] = {"p12", "p21", "ilt", "ile", "igt", "ige"};
  std::ostringstream out;
  out << "k=" << k << " n=" << n << " parts=[";
  std::vector<std::pair<int, int>> parts;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) parts.push_back({a, b});
  for (size_t p = 0; p < part_labeling.size(); ++p) {
    if (p) out << ' ';
    out << parts[p].first << parts[p].second << ":L" << part_labeling[p] + 1;
  }
  out << "] rels=[";
  size_t idx = 0;
  for (size_t p = 0; p < parts.size(); ++p)
    for (size_t q = p + 1; q < parts.size(); ++q, ++idx) {
      if (idx) out << ' ';
      out << p << '/' << q << ':' << rel_names[pair_relation[idx]];
    }
  out << ']';
  return out.str();
}

CanonicalEnumStats enumerate_canonical(
    int k, int n,
    const std::function<bool(const CanonicalSpec&, const EdgeOrderedGraph&)>& visit,
    std::uint64_t max_raw_specs) {
  check_kn(k, n);
  CanonicalEnumStats stats;
  stats.small_n_warning = (n == 2);

  MultipartiteContext ctx(k, n);
  CanonicalSpec spec;
  spec.k = k;
  spec.n = n;
  spec.part_labeling.assign(ctx.part_count, 0);
  spec.pair_relation.assign(ctx.pair_count, 0);

  std::vector<int> rel_domain(ctx.pair_count);
  for (int pi = 0; pi < ctx.pair_count; ++pi)
    rel_domain[pi] = ctx.pair_shared[pi] >= 0 ? 6 : 2;

  std::vector<int> score;
  EdgeOrderedGraph realized;
  bool done = false;
  while (!done) {
    if (stats.raw >= max_raw_specs) {
      stats.budget_exceeded = true;
      break;
    }
    ++stats.raw;
    if (ctx.realize(spec.part_labeling, spec.pair_relation, score, realized)) {
      ++stats.realized;
      bool inter = false;
      for (int r : spec.pair_relation)
        if (r >= kInterleaveLt) inter = true;
      if (inter) ++stats.interleaved;
      if (!visit(spec, realized)) {
        stats.stopped = true;
        break;
      }
    }
    // odometer: labelings are the most significant digits
    int pos = ctx.pair_count - 1;
    for (; pos >= 0; --pos) {
      if (++spec.pair_relation[pos] < rel_domain[pos]) break;
      spec.pair_relation[pos] = 0;
    }
    if (pos >= 0) continue;
    int lpos = ctx.part_count - 1;
    for (; lpos >= 0; --lpos) {
      if (++spec.part_labeling[lpos] < 8) break;
      spec.part_labeling[lpos] = 0;
    }
    if (lpos < 0) done = true;
  }
  return stats;
}

std::optional<EdgeOrderedGraph> realize_spec(const CanonicalSpec& spec) {
  check_kn(spec.k, spec.n);
  MultipartiteContext ctx(spec.k, spec.n);
  if (static_cast<int>(spec.part_labeling.size()) != ctx.part_count ||
      static_cast<int>(spec.pair_relation.size()) != ctx.pair_count)
    throw std::invalid_argument("realize_spec: wrong spec shape");
  for (int l : spec.part_labeling)
    if (l < 0 || l > 7) throw std::invalid_argument("realize_spec: bad labeling");
  for (int pi = 0; pi < ctx.pair_count; ++pi) {
    int r = spec.pair_relation[pi];
    if (r < 0 || r > 5) throw std::invalid_argument("realize_spec: bad relation");
    if (r >= kInterleaveLt && ctx.pair_shared[pi] < 0)
      throw std::invalid_argument(
          "realize_spec: interleave between parts on four distinct classes");
  }
  std::vector<int> score;
  EdgeOrderedGraph out;
  if (!ctx.realize(spec.part_labeling, spec.pair_relation, score, out))
    return std::nullopt;
  return out;
}

}  // namespace eog
