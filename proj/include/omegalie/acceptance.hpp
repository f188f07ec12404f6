#pragma once

// The end-to-end acceptance checks, shared by the acceptance test binary
// and the `paper-suite` command.

#include "omegalie/ga15.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace omegalie {

struct AcceptanceOptions {
  // Element list summed over in the symbolic identity check; defaults to
  // ga15_rows(). Replacing it is how the suite is shown to detect a broken group.
  std::optional<std::vector<Perm5>> elements;
  std::uint64_t seed = 20240607;
  bool include_scale_check = true;  // criterion 10 (the 8-dimensional algebra)
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::string anchor;  // the statement being checked
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;  // 0: no budget
};

inline constexpr int acceptance_criteria = 10;

// Runs one criterion (1..10). Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

// Runs every criterion in order; `progress` sees each result as it finishes.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options = {},
    const std::function<void(const CriterionResult&)>& progress = {});

} // namespace omegalie
