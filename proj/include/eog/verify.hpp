#pragma once

// The verification harness: replays every desk-scale claim as a numbered
// criterion and reports one pass/fail line each.

#include <iosfwd>
#include <string>
#include <vector>

namespace eog::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

int criterion_count();
const char* criterion_name(int id);  // 1-based

// Runs the listed criteria (all when ids is empty); prints "[PASS]/[FAIL] id:
// name (detail)" lines to out when given.
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids,
                                          std::ostream* out = nullptr);

}  // namespace eog::verify
