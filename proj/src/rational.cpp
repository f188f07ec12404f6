#include "omegalie/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace omegalie {

namespace {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
    digits.remove_prefix(1);
  if (digits.empty())
    throw std::invalid_argument("empty integer literal");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
  std::string s(text.front() == '+' ? text.substr(1) : text);
  return Integer(s, 10);
}

std::optional<Integer> integer_sqrt(const Integer& n) {
  if (sgn(n) < 0 || !mpz_perfect_square_p(n.get_mpz_t()))
    return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

} // namespace

Rational make_rational(long num, long den) {
  if (den == 0)
    throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view num, std::string_view den) {
  Integer n = parse_integer(num);
  Integer d = parse_integer(den);
  if (sgn(d) == 0)
    throw std::invalid_argument("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  auto n = integer_sqrt(x.get_num());
  if (!n)
    return std::nullopt;
  auto d = integer_sqrt(x.get_den());
  if (!d)
    return std::nullopt;
  return Rational(*n, *d);
}

std::string to_string(const Rational& x) { return x.get_str(); }

} // namespace omegalie
