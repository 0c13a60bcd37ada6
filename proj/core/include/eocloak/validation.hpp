#pragma once

#include <string>
#include <vector>

namespace eocloak {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail; // measured values and tolerances, for the report line
};

/// Quick operator-identity checks on the circle and the ellipse at N = 64.
std::vector<CheckResult> run_fast_checks();

/// The full acceptance battery, one result per criterion.
std::vector<CheckResult> run_acceptance_checks();

bool all_passed(const std::vector<CheckResult>& results);

} // namespace eocloak
