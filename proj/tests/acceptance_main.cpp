// Acceptance suite: runs every criterion and prints one pass/fail line each.
// Usage: eog_acceptance [--only N]

#include "eog/verify.hpp"

#include <cstring>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      ids.push_back(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: " << argv[0] << " [--only N]...\n";
      return 2;
    }
  }
  auto results = eog::verify::run_criteria(ids, &std::cout);
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  if (failed) {
    std::cout << failed << " of " << results.size() << " criteria failed\n";
    return 1;
  }
  std::cout << "all " << results.size() << " criteria passed\n";
  return 0;
}
