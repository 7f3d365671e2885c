#pragma once

#include <string>
#include <vector>

namespace brieskorn {

/// One named pass/fail item of a verification report.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

}  // namespace brieskorn
