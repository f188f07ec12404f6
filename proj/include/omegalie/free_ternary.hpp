#pragma once

// The free ternary algebra over abstract generators, restricted to the
// degrees needed for the GA(1,5)-identity: single letters, flat triples,
// and quintic products with exactly one nested triple.

#include "omegalie/eis_scalar.hpp"
#include "omegalie/ga15.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace omegalie {

using Generator = int;

// Where the inner triple sits in a quintic product.
enum class Nesting : std::uint8_t { None, Left, Middle, Right };

// Letters are stored in reading order; for a nested quintic term the nesting
// says which three consecutive letters form the inner product:
// Left = (x1 x2 x3) x4 x5, Middle = x1 (x2 x3 x4) x5, Right = x1 x2 (x3 x4 x5).
// A five-letter term with Nesting::None is a flat word (a normal form).
class Term {
 public:
  static Term leaf(Generator g);
  static Term flat(std::vector<Generator> word);  // length 1, 3 or 5
  static Term nested(std::vector<Generator> word, Nesting where);  // length 5

  const std::vector<Generator>& letters() const { return letters_; }
  Nesting nesting() const { return nesting_; }
  std::size_t degree() const { return letters_.size(); }

  friend auto operator<=>(const Term&, const Term&) = default;

 private:
  Term(std::vector<Generator> letters, Nesting nesting);
  std::vector<Generator> letters_;
  Nesting nesting_ = Nesting::None;
};

struct UnsupportedDepth : std::domain_error {
  using std::domain_error::domain_error;
};

// The ternary product of three terms. Throws UnsupportedDepth when the
// result would exceed five letters or nest more than one triple.
Term product(const Term& x, const Term& y, const Term& z);

// Finite linear combination of terms; zero coefficients are never stored.
// Iteration order is the canonical Term order, so rendering and merging
// are deterministic.
class FreePoly {
 public:
  FreePoly() = default;
  static FreePoly generator(Generator g);
  static FreePoly term(Term t, EisScalar coeff = 1);

  void add(const Term& t, const EisScalar& coeff);
  EisScalar coefficient(const Term& t) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  FreePoly& operator+=(const FreePoly& o);
  FreePoly& operator-=(const FreePoly& o);
  FreePoly& operator*=(const EisScalar& s);
  friend FreePoly operator+(FreePoly x, const FreePoly& y) { return x += y; }
  friend FreePoly operator-(FreePoly x, const FreePoly& y) { return x -= y; }
  friend FreePoly operator*(const EisScalar& s, FreePoly x) { return x *= s; }
  friend bool operator==(const FreePoly& x, const FreePoly& y) { return x.terms_ == y.terms_; }

 private:
  std::map<Term, EisScalar> terms_;
};

// Trilinear extension of the term product.
FreePoly product(const FreePoly& x, const FreePoly& y, const FreePoly& z);

enum class AssocKind { First, Second, Free };

// Rewrites nested quintic terms to flat words.
//   First:  every nesting flattens in place.
//   Second: left and right nestings flatten in place; x1 (x2 x3 x4) x5
//           becomes the word x1 x4 x3 x2 x5.
//   Free:   no rewriting.
FreePoly normalize(const FreePoly& p, AssocKind kind);

enum class AssociatorKind { First, Second };

// Coefficients on the (left, middle, right) placements.
using AssociatorCoefficients = std::array<EisScalar, 3>;
AssociatorCoefficients default_associator_coefficients();  // (1, w_bar, w)

// (a b c) g h, a (b c g) h | a (g c b) h, a b (c g h) with the given coefficients.
// Throws std::invalid_argument unless coeffs is an ordering of {1, w, w_bar}.
FreePoly omega_associator(const std::array<Generator, 5>& letters, AssociatorKind kind,
                          const AssociatorCoefficients& coeffs = default_associator_coefficients());

// [a,b,c] = abc + w bca + w_bar cab + cba + w_bar bac + w acb
FreePoly omega_commutator(const FreePoly& a, const FreePoly& b, const FreePoly& c);
// The same combination with w and w_bar swapped.
FreePoly omega_commutator_reflected(const FreePoly& a, const FreePoly& b, const FreePoly& c);

FreePoly reflect_poly(const FreePoly& p);

// abc + bca + cab - cba - bac - acb
FreePoly alternating_sum(const FreePoly& a, const FreePoly& b, const FreePoly& c);

struct OmegaExpansion {
  FreePoly polynomial;
  std::size_t raw_terms = 0;  // terms produced before like terms were merged
  std::size_t double_commutators = 0;
};

// Sum over rho in `elements` of [[a_rho(1), a_rho(2), a_rho(3)], a_rho(4), a_rho(5)]
// on generators 1..5, normalized with `kind`.
OmegaExpansion omega_polynomial(AssocKind kind, std::span<const Perm5> elements);
OmegaExpansion omega_polynomial(AssocKind kind);  // over ga15_rows()

// The four seed index sequences, each sharing a1 in the first slot:
// (1 2 3 4 5), (1 4 2 5 3), (1 5 4 3 2), (1 3 5 2 4).
std::array<std::array<Generator, 5>, 4> omega_family_seeds();

// Omega assembled as the sum of five cyclic rotations of each seed double
// commutator, without normalization.
OmegaExpansion omega_polynomial_by_families();

struct CyclicSymmetryResult {
  bool commutator = false;          // [a,b,c] - w [b,c,a] == 0 and [a,b,c] - w_bar [c,a,b] == 0
  bool reflected = false;           // reflected commutator with w_bar
  bool reversal_is_reflection = false;  // [c,b,a] == reflect([a,b,c])
  bool all() const { return commutator && reflected && reversal_is_reflection; }
};
CyclicSymmetryResult cyclic_symmetry_check();

// Coefficients in a+b*w form; words as juxtaposed generator names with
// parentheses around a nested triple. Generator g is named names[g-1] when
// provided, otherwise "a<g>".
std::string to_string(const Term& t, std::span<const std::string> names = {});
std::string to_string(const FreePoly& p, std::span<const std::string> names = {});

} // namespace omegalie
