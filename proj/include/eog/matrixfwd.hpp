#pragma once

#include <utility>
#include <vector>

namespace eog {

// A 0-1 matrix given by its dimensions and the sorted positions of its ones.
struct ZeroOnePattern {
  int rows = 0, cols = 0;
  std::vector<std::pair<int, int>> ones;
  friend bool operator==(const ZeroOnePattern&, const ZeroOnePattern&) = default;
};

}  // namespace eog
