#include "eog/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace eog {

ZeroOnePattern make_pattern(int rows, int cols,
                            std::vector<std::pair<int, int>> ones) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("make_pattern: negative dimensions");
  std::sort(ones.begin(), ones.end());
  for (size_t i = 0; i < ones.size(); ++i) {
    auto [r, c] = ones[i];
    if (r < 0 || r >= rows || c < 0 || c >= cols)
      throw std::invalid_argument("make_pattern: position out of range");
    if (i > 0 && ones[i] == ones[i - 1])
      throw std::invalid_argument("make_pattern: duplicate position");
  }
  return ZeroOnePattern{rows, cols, std::move(ones)};
}

// Rows are chosen by combination; for a fixed row selection a greedy
// left-to-right column scan suffices, because whether a host column can serve
// pattern column j does not depend on the earlier choices.
bool contains_pattern(const ZeroOnePattern& m, const ZeroOnePattern& p) {
  if (p.rows > m.rows || p.cols > m.cols) return false;
  std::vector<std::vector<char>> grid(m.rows, std::vector<char>(m.cols, 0));
  for (auto [r, c] : m.ones) grid[r][c] = 1;
  std::vector<std::vector<int>> pcol(p.cols);  // pattern rows with a 1, per column
  for (auto [r, c] : p.ones) pcol[c].push_back(r);

  std::vector<int> rows(p.rows);
  for (int i = 0; i < p.rows; ++i) rows[i] = i;
  auto advance = [&]() {
    for (int i = p.rows - 1; i >= 0; --i) {
      if (rows[i] < m.rows - (p.rows - i)) {
        ++rows[i];
        for (int j = i + 1; j < p.rows; ++j) rows[j] = rows[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  if (p.rows == 0) {
    // no rows: only column count matters
    return true;
  }
  do {
    int next = 0;
    bool ok = true;
    for (int j = 0; j < p.cols && ok; ++j) {
      bool placed = false;
      for (int c = next; c <= m.cols - (p.cols - j); ++c) {
        bool fits = true;
        for (int r : pcol[j])
          if (!grid[rows[r]][c]) {
            fits = false;
            break;
          }
        if (fits) {
          next = c + 1;
          placed = true;
          break;
        }
      }
      ok = placed;
    }
    if (ok) return true;
  } while (advance());
  return false;
}

namespace {

SidedPattern matrix_graph(const ZeroOnePattern& m) {
  std::vector<std::pair<int, int>> ones(m.ones);
  std::sort(ones.begin(), ones.end(), [](auto a, auto b) {
    return std::pair{a.second, a.first} < std::pair{b.second, b.first};
  });
  EdgeOrderedGraph g;
  g.n = m.rows + m.cols;
  for (auto [r, c] : ones) g.edges.push_back({r, m.rows + c});
  std::vector<Side> side(g.n, Side::Right);
  for (int r = 0; r < m.rows; ++r) side[r] = Side::Left;
  return SidedPattern{std::move(g), std::move(side), std::nullopt};
}

}  // namespace

SidedPattern graph_from_matrix_rowcol(const ZeroOnePattern& m) {
  return matrix_graph(m);
}

SidedPattern graph_from_matrix_col(const ZeroOnePattern& m) {
  // same pinned order: by column, ties within a column by row
  return matrix_graph(m);
}

std::vector<ZeroOnePattern> patterns_for(const EdgeOrderedGraph& h) {
  if (!is_bipartite(underlying(h)))
    throw std::invalid_argument("patterns_for: pattern graph is not bipartite");
  int m = h.edge_count();
  if (h.n > 12 || m > 8)
    throw std::invalid_argument("patterns_for: graph too large for the guard");
  std::vector<ZeroOnePattern> out;
  for (int rows = 1; rows < h.n; ++rows) {
    int cols = h.n - rows;
    int cells = rows * cols;
    if (cells < m) continue;
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i;
    auto advance = [&]() {
      for (int i = m - 1; i >= 0; --i) {
        if (pick[i] < cells - (m - i)) {
          ++pick[i];
          for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
          return true;
        }
      }
      return false;
    };
    do {
      std::vector<std::pair<int, int>> ones;
      for (int idx : pick) ones.push_back({idx / cols, idx % cols});
      ZeroOnePattern p{rows, cols, ones};
      if (are_isomorphic(graph_from_matrix_rowcol(p).graph, h)) out.push_back(p);
    } while (advance());
  }
  return out;
}

ZeroOnePattern parse_mat(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> data;
  while (std::getline(in, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    data.push_back(line.substr(first, line.find_last_not_of(" \t\r") - first + 1));
  }
  if (data.empty()) throw ParseError("parse_mat: malformed header: empty input");
  std::istringstream head(data[0]);
  int rows = 0, cols = 0;
  std::string junk;
  if (!(head >> rows >> cols) || (head >> junk) || rows < 0 || cols < 0)
    throw ParseError("parse_mat: malformed header: expected 'rows cols'");
  if (static_cast<int>(data.size()) - 1 != rows)
    throw ParseError("parse_mat: row count mismatch");
  std::vector<std::pair<int, int>> ones;
  for (int r = 0; r < rows; ++r) {
    const std::string& row = data[1 + r];
    if (static_cast<int>(row.size()) != cols)
      throw ParseError("parse_mat: row length mismatch");
    for (int c = 0; c < cols; ++c) {
      if (row[c] == '1')
        ones.push_back({r, c});
      else if (row[c] != '0')
        throw ParseError("parse_mat: rows must consist of 0/1 characters");
    }
  }
  return ZeroOnePattern{rows, cols, std::move(ones)};
}

std::string serialize_mat(const ZeroOnePattern& m) {
  std::vector<std::vector<char>> grid(m.rows, std::vector<char>(m.cols, '0'));
  for (auto [r, c] : m.ones) grid[r][c] = '1';
  std::ostringstream out;
  out << m.rows << ' ' << m.cols << '\n';
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) out << grid[r][c];
    out << '\n';
  }
  return out.str();
}

}  // namespace eog
