#pragma once

// Finite-dimensional ternary algebras given by structure constants
// [e_i, e_k, e_l] = C^m_{ikl} e_m.
//
// Indices are 0-based in the C++ API. Reports (Violation::indices) and the
// JSON format use 1-based indices.

#include "omegalie/eis_matrix.hpp"
#include "omegalie/eis_scalar.hpp"
#include "omegalie/ga15.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace omegalie {

using Vector = std::vector<EisScalar>;

class StructureTensor {
 public:
  StructureTensor() = default;
  // Zero tensor. Throws std::invalid_argument for dim == 0.
  explicit StructureTensor(std::size_t dim);

  std::size_t dim() const { return dim_; }

  EisScalar& operator()(std::size_t m, std::size_t i, std::size_t k, std::size_t l) {
    return data_[offset(m, i, k, l)];
  }
  const EisScalar& operator()(std::size_t m, std::size_t i, std::size_t k, std::size_t l) const {
    return data_[offset(m, i, k, l)];
  }

  std::size_t offset(std::size_t m, std::size_t i, std::size_t k, std::size_t l) const {
    return ((m * dim_ + i) * dim_ + k) * dim_ + l;
  }
  const std::vector<EisScalar>& data() const { return data_; }
  bool is_zero() const;

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<EisScalar> data_;
};

struct Violation {
  std::vector<int> indices;  // 1-based; layout depends on the check
  EisScalar residual;
};

struct CheckReport {
  bool passed = true;
  std::size_t checked = 0;          // index tuples examined
  std::size_t violation_count = 0;  // all violations, including unlisted ones
  std::vector<Violation> violations;  // the first `limit` violations in index order
};

inline constexpr std::size_t default_violation_limit = 1000;

// The four independent constants of a 2-dimensional w-symmetric algebra,
// ordered (C^1_121, C^2_121, C^1_212, C^2_212).
using Independent2d = std::array<EisScalar, 4>;

StructureTensor from_independent_2d(const EisScalar& p, const EisScalar& q, const EisScalar& r,
                                    const EisScalar& s);
StructureTensor from_independent_2d(const Independent2d& v);
// Throws std::invalid_argument unless dim == 2.
Independent2d independent_2d(const StructureTensor& c);

// Random tensor with C^m_{ikl} = w C^m_{kli}; each cyclic orbit gets one
// value a + b*w with a, b uniform in [lo, hi].
StructureTensor random_omega_symmetric(std::size_t dim, std::mt19937_64& rng, int lo = -3,
                                       int hi = 3);

// Checks C^m_{ikl} == w C^m_{kli} for every (m, i, k, l). Violations carry
// (m, i, k, l) and the residual C^m_{ikl} - w C^m_{kli}.
CheckReport check_omega_symmetry(const StructureTensor& c,
                                 std::size_t limit = default_violation_limit);

// For every (i, k, l, r, s, p) the sum over rho in `elements` of
// C^m_{x_rho(1) x_rho(2) x_rho(3)} C^p_{m x_rho(4) x_rho(5)} with
// (x_1..x_5) = (i, k, l, r, s). Violations carry (i, k, l, r, s, p).
CheckReport check_ga15_identity(const StructureTensor& c,
                                std::size_t limit = default_violation_limit);
CheckReport check_ga15_identity(const StructureTensor& c, std::span<const Perm5> elements,
                                std::size_t limit = default_violation_limit);
// The same sum organized as five rotations of four seed sequences.
CheckReport check_ga15_identity_families(const StructureTensor& c,
                                         std::size_t limit = default_violation_limit);

// w^m = C^m_{ikl} x^i y^k z^l. Throws std::invalid_argument on size mismatch.
Vector bracket(const StructureTensor& c, const Vector& x, const Vector& y, const Vector& z);

// Structure constants in the primed basis, where e_i = A(j, i) e'_j.
// Throws std::invalid_argument for a wrong shape and std::domain_error for singular A.
StructureTensor change_basis(const StructureTensor& c, const EisMatrix& a);

// The explicit 4x4 law on (C^1_121, C^2_121, C^1_212, C^2_212) for the same
// convention. Throws like change_basis.
Independent2d transform_2d_closed_form(const Independent2d& v, const EisMatrix& a);

class Subspace {
 public:
  // Throws std::invalid_argument when a vector has the wrong length or the
  // vectors are linearly dependent.
  Subspace(std::size_t ambient_dim, std::vector<Vector> basis);
  static Subspace span_of(const Vector& v);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  bool contains(const Vector& v) const;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

// [a, x, y] in I for basis vectors a of I and x, y of the ambient space.
// Only the first slot is tested; for w-symmetric tensors the other slots
// give scalar multiples.
bool is_ideal(const StructureTensor& c, const Subspace& ideal);

struct IdealSearch {
  bool all_subspaces = false;           // the bracket preserves every line
  std::vector<Subspace> ideals;         // one-dimensional ideals with a Q(w) direction
  std::optional<std::string> unresolved;  // a factor with no root in Q(w)
};

// One-dimensional ideals of a 2-dimensional algebra. Throws
// std::invalid_argument unless dim == 2.
IdealSearch find_one_dim_ideals_2d(const StructureTensor& c);

enum class Simplicity { Simple, NotSimple, Indeterminate };
Simplicity is_simple_2d(const StructureTensor& c);
const char* to_string(Simplicity s);

} // namespace omegalie
