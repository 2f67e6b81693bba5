#pragma once

#include <string>
#include <vector>

namespace km {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // evidence when passed, first mismatch otherwise
  double seconds = 0;
};

// The nine reproduction criteria, in order.  Never throws: a criterion that
// raises an error is reported as failed with the error text.  cli_path, when
// nonempty, points at the command-line binary and upgrades the determinism
// criterion to a process-level byte comparison.
std::vector<CriterionResult> run_acceptance(const std::string& cli_path = "");

}  // namespace km
