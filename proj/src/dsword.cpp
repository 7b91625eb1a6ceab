#include "eog/dsword.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace eog {

int Word::distinct() const {
  std::vector<int> s(letters);
  std::sort(s.begin(), s.end());
  return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
}

Word word_from_string(const std::string& s) {
  Word w;
  bool alpha = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= 'a' && c <= 'z';
  });
  if (alpha) {
    for (char c : s) w.letters.push_back(c - 'a');
    return w;
  }
  std::istringstream in(s);
  int x;
  while (in >> x) {
    if (x < 0) throw std::invalid_argument("word_from_string: negative letter");
    w.letters.push_back(x);
  }
  return w;
}

std::string word_to_string(const Word& w) {
  bool small = std::all_of(w.letters.begin(), w.letters.end(),
                           [](int x) { return x >= 0 && x < 26; });
  std::ostringstream out;
  if (small) {
    for (int x : w.letters) out << static_cast<char>('a' + x);
  } else {
    for (size_t i = 0; i < w.letters.size(); ++i)
      out << (i ? " " : "") << w.letters[i];
  }
  return out.str();
}

// first-occurrence renaming: equivalent words get identical normal forms
static std::vector<int> normal_form(const Word& w) {
  std::vector<int> out;
  out.reserve(w.letters.size());
  std::map<int, int> ren;
  for (int x : w.letters) {
    auto [it, fresh] = ren.try_emplace(x, static_cast<int>(ren.size()));
    out.push_back(it->second);
  }
  return out;
}

bool equivalent(const Word& u, const Word& v) {
  if (u.letters.size() != v.letters.size()) return false;
  return normal_form(u) == normal_form(v);
}

namespace {

struct SubwordSearch {
  const std::vector<int>& u;
  const std::vector<int>& f;  // normalized: letters 0..k-1 by first occurrence
  std::vector<int> image;     // f letter -> u letter, or -1
  std::vector<char> taken;    // u letters already images (index by letter id)

  bool dfs(size_t fi, size_t ui) {
    if (fi == f.size()) return true;
    if (u.size() - ui < f.size() - fi) return false;
    for (size_t p = ui; p + (f.size() - fi) <= u.size(); ++p) {
      int letter = u[p];
      int want = f[fi];
      if (image[want] != -1) {
        if (image[want] != letter) continue;
        if (dfs(fi + 1, p + 1)) return true;
      } else {
        if (taken[letter]) continue;
        image[want] = letter;
        taken[letter] = 1;
        if (dfs(fi + 1, p + 1)) return true;
        image[want] = -1;
        taken[letter] = 0;
      }
    }
    return false;
  }
};

}  // namespace

bool contains_word(const Word& u, const Word& f) {
  if (f.letters.empty())
    throw std::invalid_argument("contains_word: forbidden word must be non-empty");
  if (u.letters.size() < f.letters.size()) return false;
  std::vector<int> un = normal_form(u), fn = normal_form(f);
  int umax = un.empty() ? 0 : *std::max_element(un.begin(), un.end()) + 1;
  SubwordSearch s{un, fn, {}, {}};
  s.image.assign(fn.empty() ? 0 : *std::max_element(fn.begin(), fn.end()) + 1, -1);
  s.taken.assign(umax, 0);
  return s.dfs(0, 0);
}

bool is_k_regular(const Word& u, int k) {
  if (k < 2) throw std::invalid_argument("is_k_regular: k >= 2 required");
  int n = u.size();
  int window = std::min(k, n);
  for (int i = 0; i + window <= n; ++i)
    for (int a = i; a < i + window; ++a)
      for (int b = a + 1; b < i + window; ++b)
        if (u.letters[a] == u.letters[b]) return false;
  return true;
}

Word greedy_k_regular(const Word& u, int k) {
  if (k < 2) throw std::invalid_argument("greedy_k_regular: k >= 2 required");
  Word out;
  for (int x : u.letters) {
    bool ok = true;
    int len = out.size();
    for (int back = 1; back < k && back <= len; ++back)
      if (out.letters[len - back] == x) {
        ok = false;
        break;
      }
    if (ok) out.letters.push_back(x);
  }
  return out;
}

Word w_of(const EdgeOrderedGraph& star_forest) {
  if (!is_star_forest(star_forest))
    throw std::invalid_argument("w_of: input must be a star forest");
  // component ids via union-find over edges
  std::vector<int> parent(star_forest.n);
  for (int v = 0; v < star_forest.n; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : star_forest.edges) parent[find(u)] = find(v);
  Word w;
  std::map<int, int> comp_letter;
  for (auto [u, v] : star_forest.edges) {
    int root = find(u);
    auto [it, fresh] = comp_letter.try_emplace(root, static_cast<int>(comp_letter.size()));
    w.letters.push_back(it->second);
  }
  return w;
}

Word w_prime_of(const EdgeOrderedGraph& star_forest) {
  Word w = w_of(star_forest);
  int m = star_forest.edge_count();
  Word out;
  out.letters.reserve(2 * m * m);
  for (int x : w.letters)
    for (int r = 0; r < 2 * m; ++r) out.letters.push_back(x);
  return out;
}

Word u_of(const EdgeOrderedGraph& g) { return u_of(g, 0); }

Word u_of(const EdgeOrderedGraph& g, std::uint64_t flip_mask) {
  Word w;
  w.letters.reserve(2 * g.edges.size());
  for (size_t t = 0; t < g.edges.size(); ++t) {
    auto [u, v] = g.edges[t];
    bool flip = t < 64 && ((flip_mask >> t) & 1);
    w.letters.push_back(flip ? v : u);
    w.letters.push_back(flip ? u : v);
  }
  return w;
}

namespace {

struct DsSearch {
  int n, k, max_len;
  std::vector<int> fn;  // normalized forbidden word
  std::vector<int> word;
  int best = 0;
  bool capped = false;

  void grow() {
    best = std::max(best, static_cast<int>(word.size()));
    if (static_cast<int>(word.size()) >= max_len) {
      capped = true;
      return;
    }
    int used = 0;
    for (int x : word) used = std::max(used, x + 1);
    int limit = std::min(n, used + 1);  // fresh letters introduced in order
    for (int next = 0; next < limit; ++next) {
      bool regular = true;
      for (int back = 1; back < k && back <= static_cast<int>(word.size()); ++back)
        if (word[word.size() - back] == next) {
          regular = false;
          break;
        }
      if (!regular) continue;
      word.push_back(next);
      if (!contains_word(Word{word}, Word{fn})) grow();
      word.pop_back();
      if (capped) return;
    }
  }
};

}  // namespace

DsResult ds_bruteforce(int n, const Word& f, int max_len) {
  if (n < 1) throw std::invalid_argument("ds_bruteforce: n >= 1 required");
  if (f.letters.empty())
    throw std::invalid_argument("ds_bruteforce: forbidden word must be non-empty");
  DsSearch s;
  s.n = n;
  s.k = f.distinct();
  if (s.k < 1) s.k = 1;
  s.max_len = max_len;
  s.fn = normal_form(f);
  s.grow();
  return DsResult{s.best, !s.capped};
}

}  // namespace eog
