#pragma once

// Exact arithmetic in Q(w), w a primitive cube root of unity.
//
// Elements are stored in the basis {1, w} as a + b*w with rational a, b.
// The relation w^2 = -1 - w is applied on multiplication, so the
// representation is unique and equality is componentwise.

#include "omegalie/rational.hpp"

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

namespace omegalie {

class EisScalar {
 public:
  EisScalar() = default;
  EisScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
  // Implicit on purpose: integers and rationals embed in Q(w).
  EisScalar(long a) : a_(a), b_(0) {}  // NOLINT(google-explicit-constructor)
  EisScalar(const Rational& a) : a_(a), b_(0) {}  // NOLINT(google-explicit-constructor)

  static EisScalar omega() { return {Rational(0), Rational(1)}; }
  static EisScalar omega_bar() { return {Rational(-1), Rational(-1)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  // The automorphism w <-> w_bar. It coincides with complex conjugation.
  EisScalar reflect() const { return {a_ - b_, -b_}; }

  // x * reflect(x) = a^2 - ab + b^2, always a nonnegative rational.
  Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
  // x + reflect(x)
  Rational trace() const { return 2 * a_ - b_; }

  // Throws std::domain_error for zero.
  EisScalar inverse() const;

  EisScalar& operator+=(const EisScalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  EisScalar& operator-=(const EisScalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  EisScalar& operator*=(const EisScalar& o);
  EisScalar& operator/=(const EisScalar& o) { return *this *= o.inverse(); }

  // acc += x * y without temporaries for the product's components.
  void add_product(const EisScalar& x, const EisScalar& y);

  friend EisScalar operator+(EisScalar x, const EisScalar& y) { return x += y; }
  friend EisScalar operator-(EisScalar x, const EisScalar& y) { return x -= y; }
  friend EisScalar operator*(EisScalar x, const EisScalar& y) { return x *= y; }
  friend EisScalar operator/(EisScalar x, const EisScalar& y) { return x /= y; }
  EisScalar operator-() const { return {-a_, -b_}; }

  friend bool operator==(const EisScalar& x, const EisScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  // Lexicographic on (a, b). Only used to put scalars in ordered containers;
  // Q(w) has no field ordering.
  friend bool lex_less(const EisScalar& x, const EisScalar& y) {
    int c = cmp(x.a_, y.a_);
    return c < 0 || (c == 0 && cmp(x.b_, y.b_) < 0);
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

EisScalar reflect(const EisScalar& x);

// Some y with y*y == x, or nullopt when x is not a square in Q(w).
// Which of the two roots is returned is unspecified.
std::optional<EisScalar> sqrt_in_field(const EisScalar& x);

// "0", "3/2", "-w", "1+2*w", "-1/2-3*w"
std::string to_string(const EisScalar& x);
std::ostream& operator<<(std::ostream& os, const EisScalar& x);

} // namespace omegalie
