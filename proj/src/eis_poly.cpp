#include "omegalie/eis_poly.hpp"

#include <stdexcept>
#include <utility>

namespace omegalie {

EisPoly::EisPoly(std::vector<EisScalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void EisPoly::trim() {
  while (!c_.empty() && c_.back().is_zero())
    c_.pop_back();
}

EisScalar EisPoly::operator()(const EisScalar& t) const {
  EisScalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

EisPoly EisPoly::monic() const {
  if (is_zero())
    return *this;
  const EisScalar inv = leading().inverse();
  std::vector<EisScalar> out;
  for (const auto& x : c_)
    out.push_back(x * inv);
  return EisPoly(std::move(out));
}

EisPoly remainder(const EisPoly& x, const EisPoly& y) {
  if (y.is_zero())
    throw std::domain_error("polynomial division by zero");
  std::vector<EisScalar> r = x.coeffs();
  const int dy = y.degree();
  const EisScalar inv = y.leading().inverse();
  for (int d = static_cast<int>(r.size()) - 1; d >= dy; --d) {
    if (r[d].is_zero())
      continue;
    const EisScalar f = r[d] * inv;
    for (int j = 0; j <= dy; ++j)
      r[d - dy + j] -= f * y.coeffs()[j];
  }
  r.resize(std::min<std::size_t>(r.size(), dy));
  return EisPoly(std::move(r));
}

EisPoly gcd(const EisPoly& x, const EisPoly& y) {
  EisPoly a = x, b = y;
  while (!b.is_zero()) {
    EisPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<EisScalar> roots_low_degree(const EisPoly& p, bool& complete) {
  complete = true;
  const auto& c = p.coeffs();
  if (p.degree() == 1)
    return {-c[0] / c[1]};
  if (p.degree() != 2)
    throw std::invalid_argument("roots_low_degree expects degree 1 or 2");
  const EisScalar disc = c[1] * c[1] - EisScalar(4) * c[2] * c[0];
  auto root = sqrt_in_field(disc);
  if (!root) {
    complete = false;
    return {};
  }
  const EisScalar two_a = EisScalar(2) * c[2];
  EisScalar r1 = (-c[1] + *root) / two_a;
  EisScalar r2 = (-c[1] - *root) / two_a;
  if (r1 == r2)
    return {r1};
  return {r1, r2};
}

std::string to_string(const EisPoly& p, const std::string& var) {
  if (p.is_zero())
    return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    const EisScalar& x = p.coeffs()[d];
    if (x.is_zero())
      continue;
    if (!out.empty())
      out += " + ";
    out += "(" + to_string(x) + ")";
    if (d >= 1)
      out += "*" + var;
    if (d >= 2)
      out += "^" + std::to_string(d);
  }
  return out;
}

} // namespace omegalie
