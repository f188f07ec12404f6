#pragma once

// The general affine group GA(1,5) in two presentations: as the subgroup of
// S5 generated by sigma = (1 2 3 4 5) and tau = (2 4 5 3), and as the affine
// maps x -> a*x + b over F5.
//
// Composition conventions differ between the two presentations:
//   * compose(p, q) on permutations applies p first, then q. This is the
//     product pq under which tau*sigma*tau^-1 = sigma^2 and the rows
//     sigma^k tau^j act as cyclic rotations of argument positions.
//   * affine_compose(m1, m2) = (a1*a2, b1 + a1*b2) is function composition
//     m1(m2(x)), so m2 is applied first.
// affine_to_perm therefore satisfies, as maps of points,
//   affine_to_perm(affine_compose(m1, m2)) == compose(affine_to_perm(m2), affine_to_perm(m1)).

#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace omegalie {

class Perm5 {
 public:
  Perm5();  // identity
  // images[i] is the image of point i+1. Throws std::invalid_argument unless
  // images is a permutation of {1,...,5}.
  explicit Perm5(const std::array<int, 5>& images);

  // Product of disjoint or overlapping cycles, applied left to right.
  static Perm5 from_cycles(const std::vector<std::vector<int>>& cycles);

  int operator()(int point) const { return images_[point - 1]; }
  const std::array<std::uint8_t, 5>& images() const { return images_; }
  bool is_identity() const { return *this == Perm5{}; }

  friend auto operator<=>(const Perm5&, const Perm5&) = default;

 private:
  std::array<std::uint8_t, 5> images_;
};

Perm5 compose(const Perm5& p, const Perm5& q);  // p first, then q
Perm5 inverse(const Perm5& p);
Perm5 power(const Perm5& p, int k);  // k >= 0

// Cycle notation, fixed points omitted: "(1 2 3 4 5)", "(1 4)(2 3)"; "()" for the identity.
std::string to_cycle_string(const Perm5& p);
// Inverse of to_cycle_string; accepts "()" and products such as "(1 2)(3 4 5)".
// Throws std::invalid_argument on malformed text.
Perm5 parse_cycle_string(std::string_view text);

Perm5 sigma();
Perm5 tau();

using PermSet = std::set<Perm5>;

// Closure of gens under composition. Throws std::invalid_argument on empty input.
PermSet generate(std::span<const Perm5> gens);

// The 20 elements in row order sigma^k tau^j (j = 0..3 rows, k = 0..4 within a row).
std::vector<Perm5> ga15_rows();

bool is_closed(const PermSet& set);
// g s g^-1 in sub for every g in group, s in sub.
bool is_normal(const PermSet& sub, const PermSet& group);

struct AffineMap5 {
  int a = 1;  // 1..4
  int b = 0;  // 0..4

  // Throws std::invalid_argument outside the ranges above.
  static AffineMap5 make(int a, int b);
  int operator()(int x) const { return ((a * x + b) % 5 + 5) % 5; }

  friend auto operator<=>(const AffineMap5&, const AffineMap5&) = default;
};

AffineMap5 affine_compose(const AffineMap5& m1, const AffineMap5& m2);
AffineMap5 affine_inverse(const AffineMap5& m);
std::vector<AffineMap5> affine_group();  // all 20 maps, ordered by (a, b)

// Point i in {1..5} is identified with residue i mod 5 (point 5 <-> 0).
// (1,1) maps to sigma and (3,3) to tau.
Perm5 affine_to_perm(const AffineMap5& m);

} // namespace omegalie
