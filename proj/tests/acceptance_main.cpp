// One line per acceptance criterion; exit status 1 if any fails.

#include "omegalie/acceptance.hpp"

#include <cstdio>

int main() {
  using namespace omegalie;
  int failed = 0;
  run_acceptance({}, [&](const CriterionResult& r) {
    std::printf("[%s] criterion %2d: %s (%.2f s", r.passed ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.seconds);
    if (r.budget_seconds > 0)
      std::printf(", budget %.0f s", r.budget_seconds);
    std::printf(") -- %s\n", r.detail.c_str());
    std::fflush(stdout);
    failed += r.passed ? 0 : 1;
  });
  std::printf("%d of %d criteria failed\n", failed, acceptance_criteria);
  return failed == 0 ? 0 : 1;
}
