#include "omegalie/acceptance.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace omegalie;

TEST_CASE("the symbolic check detects a broken element list") {
  AcceptanceOptions broken;
  auto rows = ga15_rows();
  rows[3] = Perm5::from_cycles({{1, 2}});
  broken.elements = rows;
  const CriterionResult r = run_criterion(1, broken);
  CHECK(r.id == 1);
  CHECK_FALSE(r.passed);

  AcceptanceOptions swapped;
  swapped.elements = std::vector<Perm5>(20, Perm5());
  CHECK_FALSE(run_criterion(1, swapped).passed);
}

TEST_CASE("fast criteria pass") {
  for (int id = 1; id <= 9; ++id) {
    const CriterionResult r = run_criterion(id);
    INFO(r.title << ": " << r.detail);
    CHECK(r.passed);
  }
  CHECK_THROWS_AS(run_criterion(11), std::out_of_range);
}
