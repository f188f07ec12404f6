#include "omegalie/free_ternary.hpp"

#include <doctest.h>

#include <map>
#include <string>
#include <utility>

using namespace omegalie;

namespace {

// Oracle for Omega: expand every double commutator by hand into words
// keyed by (letters, position of the inner triple), independent of the
// FreePoly machinery.
using Key = std::pair<std::string, int>;  // letters as digits; 0 left, 1 middle, 2 right
using Expansion = std::map<Key, EisScalar>;

const EisScalar w = EisScalar::omega();
const EisScalar wb = EisScalar::omega_bar();

// coefficient and argument order of the six commutator terms, (x, y, z) -> abc ...
const std::array<std::pair<EisScalar, std::array<int, 3>>, 6> six{{
    {1, {0, 1, 2}},
    {w, {1, 2, 0}},
    {wb, {2, 0, 1}},
    {1, {2, 1, 0}},
    {wb, {1, 0, 2}},
    {w, {0, 2, 1}},
}};

Expansion expand_double(const std::array<int, 5>& x, std::size_t& raw) {
  Expansion out;
  for (const auto& [c_in, ord_in] : six) {
    std::string inner;
    for (int j : ord_in)
      inner += char('0' + x[j]);
    // outer arguments: slot 0 is the inner word, then x[3], x[4]
    for (const auto& [c_out, ord_out] : six) {
      std::string word;
      int pos = -1;
      for (int s = 0; s < 3; ++s) {
        const int arg = ord_out[s];
        if (arg == 0) {
          pos = s;
          word += inner;
        } else {
          word += char('0' + x[2 + arg]);
        }
      }
      ++raw;
      out[{word, pos}] += c_in * c_out;
    }
  }
  return out;
}

Expansion oracle_omega(std::size_t& raw) {
  Expansion total;
  for (const auto& rho : ga15_rows()) {
    std::array<int, 5> x{};
    for (int j = 0; j < 5; ++j)
      x[j] = rho(j + 1);
    for (const auto& [k, v] : expand_double(x, raw))
      total[k] += v;
  }
  std::erase_if(total, [](const auto& kv) { return kv.second.is_zero(); });
  return total;
}

Key key_of(const Term& t) {
  std::string word;
  for (Generator g : t.letters())
    word += char('0' + g);
  const int pos = t.nesting() == Nesting::Left     ? 0
                  : t.nesting() == Nesting::Middle ? 1
                  : t.nesting() == Nesting::Right  ? 2
                                                   : -1;
  return {word, pos};
}

// Collapse to flat words under the two associativity laws.
Expansion flatten_oracle(const Expansion& e, bool second_kind) {
  Expansion out;
  for (const auto& [k, v] : e) {
    std::string word = k.first;
    if (second_kind && k.second == 1)
      std::swap(word[1], word[3]);
    out[{word, -1}] += v;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

FreePoly gen(int g) { return FreePoly::generator(g); }

} // namespace

TEST_CASE("term products and depth limits") {
  const Term a = Term::leaf(1), b = Term::leaf(2), c = Term::leaf(3);
  const Term abc = product(a, b, c);
  CHECK(abc.letters() == std::vector<Generator>{1, 2, 3});
  const Term left = product(abc, a, b);
  CHECK(left.nesting() == Nesting::Left);
  CHECK(product(a, abc, b).nesting() == Nesting::Middle);
  CHECK(product(a, b, abc).nesting() == Nesting::Right);
  CHECK_THROWS_AS(product(left, a, b), UnsupportedDepth);
  CHECK_THROWS_AS(product(abc, abc, a), UnsupportedDepth);
  CHECK(to_string(left) == "(a1a2a3)a1a2");
}

TEST_CASE("normal forms under the two associativity laws") {
  const FreePoly mid = FreePoly::term(Term::nested({1, 2, 3, 4, 5}, Nesting::Middle));
  CHECK(normalize(mid, AssocKind::First) == FreePoly::term(Term::flat({1, 2, 3, 4, 5})));
  CHECK(normalize(mid, AssocKind::Second) == FreePoly::term(Term::flat({1, 4, 3, 2, 5})));
  CHECK(normalize(mid, AssocKind::Free) == mid);
}

TEST_CASE("w-associators vanish modulo their own associativity") {
  const std::array<Generator, 5> x{1, 2, 3, 4, 5};
  const FreePoly first = omega_associator(x, AssociatorKind::First);
  CHECK_FALSE(first.is_zero());
  CHECK(normalize(first, AssocKind::First).is_zero());
  const AssociatorCoefficients second_coeffs{1, w, wb};
  CHECK(normalize(omega_associator(x, AssociatorKind::Second, second_coeffs), AssocKind::Second)
            .is_zero());
  // associator plus its reflection has coefficients (2, -1, -1)
  const FreePoly sum = first + reflect_poly(first);
  CHECK(sum.coefficient(Term::nested({1, 2, 3, 4, 5}, Nesting::Left)) == EisScalar(2));
  CHECK(sum.coefficient(Term::nested({1, 2, 3, 4, 5}, Nesting::Middle)) == EisScalar(-1));
  CHECK(sum.coefficient(Term::nested({1, 2, 3, 4, 5}, Nesting::Right)) == EisScalar(-1));
  for (const auto& [t, c] : sum)
    CHECK(c.is_rational());
  CHECK_THROWS_AS(omega_associator(x, AssociatorKind::First, {1, 1, w}), std::invalid_argument);
}

TEST_CASE("commutator identities") {
  const FreePoly a = gen(1), b = gen(2), c = gen(3);
  const FreePoly abc = omega_commutator(a, b, c);
  CHECK(abc.size() == 6);
  CHECK(abc == w * omega_commutator(b, c, a));
  CHECK(abc == wb * omega_commutator(c, a, b));
  CHECK(omega_commutator(c, b, a) == reflect_poly(abc));
  CHECK(omega_commutator_reflected(a, b, c) == reflect_poly(abc));
  CHECK(omega_commutator(a, a, a).is_zero());
  // [a,b,a] = 2aba - baa - aab
  FreePoly aba = FreePoly::term(Term::flat({1, 2, 1}), 2);
  aba.add(Term::flat({2, 1, 1}), -1);
  aba.add(Term::flat({1, 1, 2}), -1);
  CHECK(omega_commutator(a, b, a) == aba);
  const FreePoly alt = alternating_sum(a, b, c);
  CHECK(alt.size() == 6);
  CHECK(cyclic_symmetry_check().all());
}

TEST_CASE("Omega agrees with an independent expansion") {
  std::size_t raw = 0;
  const Expansion oracle = oracle_omega(raw);
  CHECK(raw == 720);
  CHECK(oracle.size() == 360);

  const OmegaExpansion free = omega_polynomial(AssocKind::Free);
  CHECK(free.raw_terms == 720);
  CHECK(free.double_commutators == 20);
  REQUIRE(free.polynomial.size() == oracle.size());
  for (const auto& [t, c] : free.polynomial) {
    auto it = oracle.find(key_of(t));
    REQUIRE(it != oracle.end());
    CHECK(it->second == c);
  }
  CHECK(flatten_oracle(oracle, false).empty());
  CHECK(flatten_oracle(oracle, true).empty());
  CHECK(omega_polynomial(AssocKind::First).polynomial.is_zero());
  CHECK(omega_polynomial(AssocKind::Second).polynomial.is_zero());
}

TEST_CASE("Omega by cyclic families") {
  const auto by_families = omega_polynomial_by_families();
  CHECK(by_families.double_commutators == 20);
  CHECK(by_families.polynomial == omega_polynomial(AssocKind::Free).polynomial);
  for (const auto& seed : omega_family_seeds())
    CHECK(seed[0] == 1);
}

TEST_CASE("a non-group element list does not give zero") {
  auto rows = ga15_rows();
  rows[7] = Perm5::from_cycles({{1, 2}});
  CHECK_FALSE(omega_polynomial(AssocKind::Second, rows).polynomial.is_zero());
  CHECK_FALSE(omega_polynomial(AssocKind::First, rows).polynomial.is_zero());
}
