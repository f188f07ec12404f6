#pragma once

// Arbitrary-precision rationals backed by GMP's mpq_class. mpq_class keeps
// values canonical (positive denominator, coprime parts) after every
// arithmetic operation; values built from raw parts go through
// make_rational, which canonicalizes.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace omegalie {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Parses decimal integer strings ("-12", "7"). Throws std::invalid_argument
// on malformed text or a zero denominator.
Rational parse_rational(std::string_view num, std::string_view den = "1");

// Exact square root in Q, if the argument is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& x);

// "3", "-1/2"
std::string to_string(const Rational& x);

} // namespace omegalie
