#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace resurgence {

struct AcceptanceCriterion {
  int id = 0;
  std::string description;
  /// Returns pass/fail; `detail` collects a short explanation either way.
  std::function<bool(std::string& detail)> run;
};

const std::vector<AcceptanceCriterion>& acceptance_criteria();

/// Runs every criterion, printing one pass/fail line each; returns the
/// number of failures.
int run_acceptance_suite(std::ostream& out);

}  // namespace resurgence
