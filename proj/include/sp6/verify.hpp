#pragma once

#include "sp6/spectral.hpp"

#include <string>
#include <vector>

namespace sp6 {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string message;  // diff details on failure, short note on success
};

// Every reference-table comparison, one named check each. The sign policy
// selects which d1 matrices are compared against the embedded ones.
std::vector<CheckResult> run_all_checks(SignPolicy policy = SignPolicy::solved);

}  // namespace sp6
