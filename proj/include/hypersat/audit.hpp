#pragma once

#include <span>
#include <string>
#include <vector>

namespace hypersat {

// One checked postcondition. witness is empty on success and names the first
// offending object otherwise.
struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
};

inline bool all_passed(std::span<const Check> checks) {
  for (const Check& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

}  // namespace hypersat
