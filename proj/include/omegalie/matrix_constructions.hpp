#pragma once

// Concrete associative ternary algebras (rectangular matrices with A B^T C,
// ordinary triple products, cubic matrices with the beta and gamma forms),
// the w-commutator evaluated in them, and structure-constant extraction.

#include "omegalie/eis_matrix.hpp"
#include "omegalie/structure_tensor.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace omegalie {

using RectMatrix = EisMatrix;

// Three-index array X(i, j, k), 0-based.
class CubicMatrix {
 public:
  CubicMatrix() = default;
  // Zero array. Throws std::invalid_argument for n == 0.
  explicit CubicMatrix(std::size_t n);
  static CubicMatrix unit(std::size_t n, std::size_t i, std::size_t j, std::size_t k);

  std::size_t order() const { return n_; }
  EisScalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * n_ + j) * n_ + k];
  }
  const EisScalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n_ + j) * n_ + k];
  }
  const std::vector<EisScalar>& data() const { return data_; }
  bool is_zero() const;

  CubicMatrix& operator+=(const CubicMatrix& o);
  CubicMatrix& operator-=(const CubicMatrix& o);
  CubicMatrix& operator*=(const EisScalar& s);
  friend CubicMatrix operator+(CubicMatrix x, const CubicMatrix& y) { return x += y; }
  friend CubicMatrix operator-(CubicMatrix x, const CubicMatrix& y) { return x -= y; }
  friend CubicMatrix operator*(const EisScalar& s, CubicMatrix x) { return x *= s; }
  friend bool operator==(const CubicMatrix&, const CubicMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<EisScalar> data_;
};

// All shape errors below throw std::invalid_argument.

// A B^T C for three m x n matrices.
RectMatrix rect_triple(const RectMatrix& a, const RectMatrix& b, const RectMatrix& c);
// A B C for square matrices of one order.
RectMatrix binary_derived_triple(const RectMatrix& a, const RectMatrix& b, const RectMatrix& c);

// (X A)_{ijl} = X_{ijk} A_{kl}
CubicMatrix cubic_right_action(const CubicMatrix& x, const EisMatrix& a);
// beta(X,Y)_{pk} = X_{rsp} Y_{srk}
EisMatrix beta_form(const CubicMatrix& x, const CubicMatrix& y);
// gamma(X,Y)_{pk} = X_{rsp} Y_{rsk}
EisMatrix gamma_form(const CubicMatrix& x, const CubicMatrix& y);
// The slice X_(p) = (X_{rsp})_{rs}.
EisMatrix third_index_slice(const CubicMatrix& x, std::size_t p);

enum class CubicForm { Beta, Gamma };
// X . form(Y, Z)
CubicMatrix cubic_triple(const CubicMatrix& x, const CubicMatrix& y, const CubicMatrix& z,
                         CubicForm form);

// t1_j = X_{iij}, t2_j = X_{iji}, t3_j = X_{jii}
std::array<Vector, 3> traces(const CubicMatrix& x);
bool is_traceless(const CubicMatrix& x);
// The 3n x n^3 system whose kernel is the traceless cubic matrices of order n.
EisMatrix trace_constraints(std::size_t n);
std::size_t traceless_dimension(std::size_t n);

struct TracelessBasis {
  CubicMatrix e1;  // X111 = 1, X221 = X212 = X122 = -1
  CubicMatrix e2;  // X222 = 1, X112 = X121 = X211 = -1
};
TracelessBasis traceless_basis_order2();

enum class VectorVariant { Cyclic, Full };
// Cyclic: C^m_{ijk} = d_ki d^m_j + w d_ij d^m_k + w_bar d_jk d^m_i.
// Full: the negative, which is the six-term commutator of the 1 x n algebra.
// Throws std::invalid_argument for n == 0.
StructureTensor vector_structure_constants(std::size_t n, VectorVariant variant);

// Coordinates of a carrier element in a fixed entry order, and the inverse.
Vector flatten(const EisMatrix& m);
Vector flatten(const CubicMatrix& x);
inline Vector flatten(const Vector& v) { return v; }
EisMatrix unflatten_like(const EisMatrix& shape, const Vector& v);
CubicMatrix unflatten_like(const CubicMatrix& shape, const Vector& v);
inline Vector unflatten_like(const Vector& shape, const Vector& v) {
  if (shape.size() != v.size())
    throw std::invalid_argument("coordinate vector has the wrong length");
  return v;
}

// A named trilinear product on carrier T.
template <class T>
struct TernaryProduct {
  std::string name;
  std::function<T(const T&, const T&, const T&)> apply;
  T operator()(const T& x, const T& y, const T& z) const { return apply(x, y, z); }
};

TernaryProduct<RectMatrix> rect_transpose_product();
TernaryProduct<RectMatrix> binary_derived_product();
TernaryProduct<CubicMatrix> cubic_product(CubicForm form);
// [x, y, z] given by the structure constants of c
TernaryProduct<Vector> tensor_product(StructureTensor c);

// Random element shaped like `shape`, entries a + b*w with a, b in [lo, hi].
template <class T>
T random_like(const T& shape, std::mt19937_64& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Vector v = flatten(shape);
  for (auto& x : v)
    x = EisScalar(Rational(dist(rng)), Rational(dist(rng)));
  return unflatten_like(shape, v);
}

// abc + w bca + w_bar cab + cba + w_bar bac + w acb, evaluated in the carrier
template <class T>
T omega_commutator_eval(const TernaryProduct<T>& prod, const T& a, const T& b, const T& c) {
  const EisScalar w = EisScalar::omega();
  const EisScalar wb = EisScalar::omega_bar();
  const std::array<std::pair<EisScalar, Vector>, 6> terms{{
      {1, flatten(prod(a, b, c))},
      {w, flatten(prod(b, c, a))},
      {wb, flatten(prod(c, a, b))},
      {1, flatten(prod(c, b, a))},
      {wb, flatten(prod(b, a, c))},
      {w, flatten(prod(a, c, b))},
  }};
  Vector sum(terms[0].second.size());
  for (const auto& [k, v] : terms)
    for (std::size_t i = 0; i < sum.size(); ++i)
      sum[i].add_product(k, v[i]);
  return unflatten_like(a, sum);
}

struct NotClosed : std::runtime_error {
  NotClosed(std::array<std::size_t, 3> triple, const std::string& what)
      : std::runtime_error(what), triple(triple) {}
  std::array<std::size_t, 3> triple;  // 1-based
};
struct DependentBasis : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Structure constants from coordinate brackets: bracket_of(i, k, l) returns
// the flattened bracket of basis elements i, k, l; basis_columns holds the
// flattened basis as columns. Triples are evaluated in parallel; the first
// failure in (i, k, l) order is rethrown.
StructureTensor extract_from_brackets(
    const EisMatrix& basis_columns,
    const std::function<Vector(std::size_t, std::size_t, std::size_t)>& bracket_of);

// Throws DependentBasis when the basis is linearly dependent and NotClosed
// when some w-commutator of basis elements leaves their span.
template <class T>
StructureTensor extract_structure_constants(const TernaryProduct<T>& prod,
                                            const std::vector<T>& basis) {
  if (basis.empty())
    throw DependentBasis("basis is empty");
  const std::size_t len = flatten(basis.front()).size();
  EisMatrix cols(len, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Vector v = flatten(basis[j]);
    if (v.size() != len)
      throw std::invalid_argument("basis elements have different shapes");
    for (std::size_t i = 0; i < len; ++i)
      cols(i, j) = v[i];
  }
  return extract_from_brackets(cols, [&](std::size_t i, std::size_t k, std::size_t l) {
    return flatten(omega_commutator_eval(prod, basis[i], basis[k], basis[l]));
  });
}

enum class Associativity { First, Second };

template <class T>
struct ProbeReport {
  CheckReport check;  // violations carry (trial, equation, coordinate), 1-based
  std::optional<std::array<T, 5>> witness;  // (a, b, c, g, h) of the first failure
};

// Compares (abc)gh, a(bcg)h | a(gcb)h, and ab(cgh) on random elements.
// Equation 1 is left = middle, equation 2 is middle = right. Trial t draws
// from a generator seeded with (seed, t), so results depend only on seed.
template <class T>
ProbeReport<T> associativity_probe(const TernaryProduct<T>& prod, Associativity kind,
                                   std::size_t trials, std::uint64_t seed, const T& shape) {
  if (trials == 0)
    throw std::invalid_argument("trials must be at least 1");
  ProbeReport<T> report;
  for (std::size_t t = 0; t < trials; ++t) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(t)};
    std::mt19937_64 rng(seq);
    std::array<T, 5> x;
    for (auto& e : x)
      e = random_like(shape, rng);
    const auto& [a, b, c, g, h] = x;
    const Vector left = flatten(prod(prod(a, b, c), g, h));
    const Vector middle = kind == Associativity::First ? flatten(prod(a, prod(b, c, g), h))
                                                       : flatten(prod(a, prod(g, c, b), h));
    const Vector right = flatten(prod(a, b, prod(c, g, h)));
    const std::array<std::pair<const Vector*, const Vector*>, 2> eqs{
        {{&left, &middle}, {&middle, &right}}};
    for (std::size_t e = 0; e < 2; ++e) {
      ++report.check.checked;
      const Vector& u = *eqs[e].first;
      const Vector& v = *eqs[e].second;
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == v[i])
          continue;
        ++report.check.violation_count;
        if (report.check.violations.size() < default_violation_limit)
          report.check.violations.push_back(
              {{int(t) + 1, int(e) + 1, int(i) + 1}, u[i] - v[i]});
        if (!report.witness)
          report.witness = x;
      }
    }
  }
  report.check.passed = report.check.violation_count == 0;
  return report;
}

// Canonical bases: matrix units E_{rc} in row-major order, cubic units
// E_{ijk} in (i, j, k) order, standard vectors.
std::vector<RectMatrix> matrix_unit_basis(std::size_t rows, std::size_t cols);
std::vector<CubicMatrix> cubic_unit_basis(std::size_t n);

} // namespace omegalie
