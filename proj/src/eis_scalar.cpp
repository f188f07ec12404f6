#include "omegalie/eis_scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace omegalie {

// (a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w, using w^2 = -1 - w.
EisScalar& EisScalar::operator*=(const EisScalar& o) {
  Rational bd = b_ * o.b_;
  Rational new_b = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = a_ * o.a_ - bd;
  b_ = std::move(new_b);
  return *this;
}

void EisScalar::add_product(const EisScalar& x, const EisScalar& y) {
  if (x.is_zero() || y.is_zero())
    return;
  thread_local Rational t;
  mpq_mul(t.get_mpq_t(), x.b_.get_mpq_t(), y.b_.get_mpq_t());
  // a += x.a*y.a - bd ; b += x.a*y.b + x.b*y.a - bd
  a_ -= t;
  b_ -= t;
  mpq_mul(t.get_mpq_t(), x.a_.get_mpq_t(), y.a_.get_mpq_t());
  a_ += t;
  mpq_mul(t.get_mpq_t(), x.a_.get_mpq_t(), y.b_.get_mpq_t());
  b_ += t;
  mpq_mul(t.get_mpq_t(), x.b_.get_mpq_t(), y.a_.get_mpq_t());
  b_ += t;
}

EisScalar EisScalar::inverse() const {
  if (is_zero())
    throw std::domain_error("division by zero in Q(w)");
  Rational n = norm();
  EisScalar c = reflect();
  return {c.a_ / n, c.b_ / n};
}

EisScalar reflect(const EisScalar& x) { return x.reflect(); }

// If y^2 = x and n = N(y), t = y + reflect(y), then y^2 + n = y * t, so
// y = (x + n) / t with n^2 = N(x) and t^2 = Tr(x) + 2n. When t = 0 the root
// is a rational multiple of sqrt(-3) = 1 + 2w and x = -3k^2.
std::optional<EisScalar> sqrt_in_field(const EisScalar& x) {
  if (x.is_zero())
    return EisScalar{};
  auto n = rational_sqrt(x.norm());
  if (!n)
    return std::nullopt;
  Rational t2 = x.trace() + 2 * (*n);
  if (sgn(t2) == 0) {
    if (!x.is_rational())
      return std::nullopt;
    Rational q = -x.a() / 3;
    auto k = rational_sqrt(q);
    if (!k)
      return std::nullopt;
    return EisScalar(*k, 2 * (*k));
  }
  auto t = rational_sqrt(t2);
  if (!t)
    return std::nullopt;
  EisScalar y = (x + EisScalar(*n)) / EisScalar(*t);
  if (!(y * y == x))
    return std::nullopt;
  return y;
}

std::string to_string(const EisScalar& x) {
  const Rational& a = x.a();
  const Rational& b = x.b();
  if (sgn(b) == 0)
    return to_string(a);
  std::string w;
  if (b == 1)
    w = "w";
  else if (b == -1)
    w = "-w";
  else
    w = to_string(b) + "*w";
  if (sgn(a) == 0)
    return w;
  std::string out = to_string(a);
  if (sgn(b) > 0)
    out += '+';
  return out + w;
}

std::ostream& operator<<(std::ostream& os, const EisScalar& x) { return os << to_string(x); }

} // namespace omegalie
