#pragma once

// Univariate polynomials over Q(w), enough for small gcd and root problems.

#include "omegalie/eis_scalar.hpp"

#include <string>
#include <vector>

namespace omegalie {

class EisPoly {
 public:
  EisPoly() = default;
  // Coefficients from the constant term up; trailing zeros are dropped.
  explicit EisPoly(std::vector<EisScalar> coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<EisScalar>& coeffs() const { return c_; }
  const EisScalar& leading() const { return c_.back(); }

  EisScalar operator()(const EisScalar& t) const;
  EisPoly monic() const;

  friend bool operator==(const EisPoly&, const EisPoly&) = default;

 private:
  void trim();
  std::vector<EisScalar> c_;
};

// Remainder of x divided by y. Throws std::domain_error when y is zero.
EisPoly remainder(const EisPoly& x, const EisPoly& y);
// Monic gcd; gcd(0, 0) is 0.
EisPoly gcd(const EisPoly& x, const EisPoly& y);

// Distinct roots in Q(w) of a polynomial of degree 1 or 2. `complete` is set
// to false when a quadratic has no root in the field.
std::vector<EisScalar> roots_low_degree(const EisPoly& p, bool& complete);

std::string to_string(const EisPoly& p, const std::string& var = "t");

} // namespace omegalie
