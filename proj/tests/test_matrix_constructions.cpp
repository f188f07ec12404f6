#include "omegalie/classify2d.hpp"
#include "omegalie/matrix_constructions.hpp"

#include <doctest.h>

#include <random>

using namespace omegalie;

namespace {

const EisScalar w = EisScalar::omega();
const EisScalar wb = EisScalar::omega_bar();

// Oracle: X . beta(Y, Z) written as one contraction,
// (XYZ)_{ijk} = X_{ijl} Y_{nml} Z_{mnk}.
CubicMatrix beta_triple_direct(const CubicMatrix& x, const CubicMatrix& y, const CubicMatrix& z) {
  const std::size_t n = x.order();
  CubicMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
              out(i, j, k) += x(i, j, l) * y(a, b, l) * z(b, a, k);
  return out;
}

CubicMatrix beta_commutator_direct(const CubicMatrix& x, const CubicMatrix& y,
                                   const CubicMatrix& z) {
  return beta_triple_direct(x, y, z) + w * beta_triple_direct(y, z, x) +
         wb * beta_triple_direct(z, x, y) + beta_triple_direct(z, y, x) +
         wb * beta_triple_direct(y, x, z) + w * beta_triple_direct(x, z, y);
}

CubicMatrix single(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  return CubicMatrix::unit(n, i, j, k);
}

// x + k y in coordinates
template <class T>
T combine(const T& x, const EisScalar& k, const T& y) {
  Vector v = flatten(x);
  const Vector u = flatten(y);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i].add_product(k, u[i]);
  return unflatten_like(x, v);
}

template <class T>
void check_trilinear(const TernaryProduct<T>& prod, const T& shape, std::mt19937_64& rng) {
  const T a = random_like(shape, rng), b = random_like(shape, rng), c = random_like(shape, rng),
          d = random_like(shape, rng);
  const EisScalar k = EisScalar(2) - w;
  const T ab = combine(a, k, b);
  CHECK(flatten(prod(ab, c, d)) == flatten(combine(prod(a, c, d), k, prod(b, c, d))));
  CHECK(flatten(prod(c, ab, d)) == flatten(combine(prod(c, a, d), k, prod(c, b, d))));
  CHECK(flatten(prod(c, d, ab)) == flatten(combine(prod(c, d, a), k, prod(c, d, b))));
  for (const auto& x : flatten(omega_commutator_eval(prod, a, a, a)))
    CHECK(x.is_zero());
}

} // namespace

TEST_CASE("rectangular products") {
  const RectMatrix a{{1, 2}, {3, 4}}, c{{0, 1}, {w, 2}};
  CHECK(rect_triple(a, EisMatrix::identity(2), c) == a * c);
  CHECK(rect_triple(RectMatrix{{1, 0}}, RectMatrix{{0, 1}}, RectMatrix{{1, 0}}) ==
        RectMatrix{{0, 0}});
  CHECK_THROWS_AS(rect_triple(a, RectMatrix{{1, 2}}, c), std::invalid_argument);
  const RectMatrix e = EisMatrix::identity(2);
  CHECK(binary_derived_triple(e, a, e) == a);
  CHECK(binary_derived_triple(a, e, e) == a);
  CHECK(binary_derived_triple(e, e, a) == a);
  CHECK(omega_commutator_eval(binary_derived_product(), e, a, e).is_zero());
  CHECK_THROWS_AS(binary_derived_triple(a, RectMatrix{{1, 2}}, a), std::invalid_argument);
}

TEST_CASE("cubic right action and forms") {
  std::mt19937_64 rng(31);
  const CubicMatrix x = random_like(CubicMatrix(3), rng), y = random_like(CubicMatrix(3), rng);
  const EisMatrix a = random_like(EisMatrix(3, 3), rng), b = random_like(EisMatrix(3, 3), rng);
  CHECK(cubic_right_action(x, EisMatrix::identity(3)) == x);
  CHECK(cubic_right_action(cubic_right_action(x, a), b) == cubic_right_action(x, a * b));
  CHECK(cubic_right_action(single(2, 0, 0, 0), EisMatrix{{0, 1}, {0, 0}}) == single(2, 0, 0, 1));
  CHECK_THROWS_AS(cubic_right_action(x, EisMatrix::identity(2)), std::invalid_argument);

  const EisMatrix unit11{{1, 0}, {0, 0}};
  CHECK(beta_form(single(2, 0, 0, 0), single(2, 0, 0, 0)) == unit11);
  const EisMatrix bxy = beta_form(x, y), gxy = gamma_form(x, y);
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t k = 0; k < 3; ++k) {
      const EisMatrix xp = third_index_slice(x, p), yk = third_index_slice(y, k);
      const EisMatrix prod = xp * yk;
      EisScalar trace, inner;
      for (std::size_t r = 0; r < 3; ++r) {
        trace += prod(r, r);
        for (std::size_t s = 0; s < 3; ++s)
          inner += xp(r, s) * yk(r, s);
      }
      CHECK(bxy(p, k) == trace);
      CHECK(gxy(p, k) == inner);
    }
  CHECK(cubic_triple(single(2, 0, 0, 0), single(2, 0, 0, 0), single(2, 0, 0, 0), CubicForm::Beta) ==
        single(2, 0, 0, 0));
}

TEST_CASE("beta satisfies the compatibility condition") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = t % 2 ? 3 : 2;
    const CubicMatrix u = random_like(CubicMatrix(n), rng), v = random_like(CubicMatrix(n), rng),
                      y = random_like(CubicMatrix(n), rng), z = random_like(CubicMatrix(n), rng);
    CHECK(beta_form(cubic_right_action(u, beta_form(z, y)), v) ==
          beta_form(y, cubic_right_action(z, beta_form(u, v))));
  }
}

TEST_CASE("the cubic-beta commutator matches the entrywise formula") {
  std::mt19937_64 rng(43);
  const auto prod = cubic_product(CubicForm::Beta);
  for (std::size_t n : {2, 3}) {
    const CubicMatrix x = random_like(CubicMatrix(n), rng), y = random_like(CubicMatrix(n), rng),
                      z = random_like(CubicMatrix(n), rng);
    CHECK(prod(x, y, z) == beta_triple_direct(x, y, z));
    CHECK(omega_commutator_eval(prod, x, y, z) == beta_commutator_direct(x, y, z));
  }
}

TEST_CASE("products are trilinear") {
  std::mt19937_64 rng(47);
  check_trilinear(rect_transpose_product(), RectMatrix(3, 2), rng);
  check_trilinear(binary_derived_product(), RectMatrix(2, 2), rng);
  check_trilinear(cubic_product(CubicForm::Beta), CubicMatrix(2), rng);
  check_trilinear(cubic_product(CubicForm::Gamma), CubicMatrix(3), rng);
  check_trilinear(tensor_product(from_independent_2d(1, 2, 3, 4)), Vector(2), rng);
}

TEST_CASE("associativity probes") {
  const auto rect = associativity_probe(rect_transpose_product(), Associativity::Second, 30, 1,
                                        RectMatrix(3, 2));
  CHECK(rect.check.passed);
  CHECK(rect.check.checked == 60);
  const auto first = associativity_probe(rect_transpose_product(), Associativity::First, 30, 1,
                                         RectMatrix(2, 2));
  CHECK_FALSE(first.check.passed);
  REQUIRE(first.witness);
  {
    const auto& [a, b, c, g, h] = *first.witness;
    const auto& p = rect_transpose_product();
    CHECK((p(p(a, b, c), g, h) != p(a, p(b, c, g), h) || p(a, p(b, c, g), h) != p(a, b, p(c, g, h))));
  }
  CHECK(associativity_probe(binary_derived_product(), Associativity::First, 30, 1, RectMatrix(2, 2))
            .check.passed);
  for (std::size_t n : {2, 3}) {
    CHECK(associativity_probe(cubic_product(CubicForm::Beta), Associativity::Second, 10, 2,
                              CubicMatrix(n))
              .check.passed);
    CHECK(associativity_probe(cubic_product(CubicForm::Gamma), Associativity::Second, 10, 2,
                              CubicMatrix(n))
              .check.passed);
  }
  // same seed, same result
  const auto again = associativity_probe(rect_transpose_product(), Associativity::First, 30, 1,
                                         RectMatrix(2, 2));
  CHECK(again.check.violation_count == first.check.violation_count);
  CHECK(again.witness == first.witness);
  CHECK_THROWS_AS(associativity_probe(rect_transpose_product(), Associativity::First, 0, 1,
                                      RectMatrix(2, 2)),
                  std::invalid_argument);
}

TEST_CASE("traces and the traceless order-2 matrices") {
  const TracelessBasis t = traceless_basis_order2();
  const auto& e1 = t.e1;
  const auto& e2 = t.e2;
  CHECK(e1(1, 1, 0) == -e1(0, 0, 0));
  CHECK(e1(1, 0, 1) == -e1(0, 0, 0));
  CHECK(e1(0, 1, 1) == -e1(0, 0, 0));
  CHECK(e2(0, 0, 1) == -e2(1, 1, 1));
  CHECK(e2(0, 1, 0) == -e2(1, 1, 1));
  CHECK(e2(1, 0, 0) == -e2(1, 1, 1));
  CHECK(is_traceless(e1));
  CHECK(is_traceless(e2));
  for (const auto& v : traces(e1))
    CHECK(v == Vector{0, 0});
  for (const auto& v : traces(single(2, 0, 0, 0)))
    CHECK(v == Vector{1, 0});
  std::mt19937_64 rng(53);
  const CubicMatrix x = random_like(CubicMatrix(3), rng), y = random_like(CubicMatrix(3), rng);
  const auto tx = traces(x), ty = traces(y), txy = traces(x + y);
  for (int j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(txy[j][i] == tx[j][i] + ty[j][i]);

  CHECK(traceless_dimension(2) == 2);
  CHECK(traceless_dimension(3) == 27 - 9);
  // E1 and E2 lie in, and span, the kernel of the trace system
  const EisMatrix sys = trace_constraints(2);
  CHECK((sys * EisMatrix::column(flatten(e1))).is_zero());
  CHECK((sys * EisMatrix::column(flatten(e2))).is_zero());

  const auto prod = cubic_product(CubicForm::Beta);
  CHECK(omega_commutator_eval(prod, e1, e2, e1) == EisScalar(-8) * e2);
  CHECK(omega_commutator_eval(prod, e2, e1, e2) == EisScalar(-8) * e1);
  const StructureTensor c = extract_structure_constants(prod, std::vector{e1, e2});
  CHECK(independent_2d(c) == Independent2d{0, -8, -8, 0});
  CHECK(classify(c).label == ClassLabel::II);
}

TEST_CASE("vector algebra") {
  const StructureTensor cyc = vector_structure_constants(2, VectorVariant::Cyclic);
  CHECK(bracket(cyc, {1, 0}, {0, 1}, {1, 0}) == Vector{0, 1});
  CHECK(bracket(cyc, {0, 1}, {1, 0}, {0, 1}) == Vector{1, 0});
  const StructureTensor full = vector_structure_constants(2, VectorVariant::Full);
  CHECK(bracket(full, {1, 0}, {0, 1}, {1, 0}) == Vector{0, -1});
  CHECK_THROWS_AS(vector_structure_constants(0, VectorVariant::Cyclic), std::invalid_argument);
  for (std::size_t n : {1, 2, 3, 4}) {
    CHECK(check_omega_symmetry(vector_structure_constants(n, VectorVariant::Cyclic)).passed);
    CHECK(check_omega_symmetry(vector_structure_constants(n, VectorVariant::Full)).passed);
  }
  for (std::size_t n : {2, 3})
    CHECK(extract_structure_constants(rect_transpose_product(), matrix_unit_basis(1, n)) ==
          vector_structure_constants(n, VectorVariant::Full));
  CHECK(classify(cyc).label == ClassLabel::II);
  CHECK(classify(full).label == ClassLabel::II);
}

TEST_CASE("extraction") {
  const StructureTensor bin =
      extract_structure_constants(binary_derived_product(), matrix_unit_basis(2, 2));
  CHECK(bin.dim() == 4);
  CHECK(check_omega_symmetry(bin).passed);
  CHECK(check_ga15_identity(bin).passed);

  const StructureTensor rect =
      extract_structure_constants(rect_transpose_product(), matrix_unit_basis(2, 2));
  CHECK(check_omega_symmetry(rect).passed);
  CHECK(check_ga15_identity(rect).passed);

  // two basis vectors of a generic 3-dimensional algebra span no subalgebra
  std::mt19937_64 rng(59);
  const auto prod = tensor_product(random_omega_symmetric(3, rng));
  const std::vector<Vector> partial{{1, 0, 0}, {0, 1, 0}};
  try {
    extract_structure_constants(prod, partial);
    FAIL("expected NotClosed");
  } catch (const NotClosed& e) {
    for (std::size_t i : e.triple) {
      CHECK(i >= 1);
      CHECK(i <= 2);
    }
  }
  CHECK_THROWS_AS(extract_structure_constants(prod, std::vector<Vector>{{1, 0, 0}, {2, 0, 0}}),
                  DependentBasis);
  CHECK_THROWS_AS(extract_structure_constants(prod, std::vector<Vector>{}), DependentBasis);
  // on the standard basis of a tensor algebra, extraction reads back the w-commutator
  std::mt19937_64 rng2(61);
  const StructureTensor c = random_omega_symmetric(3, rng2);
  const std::vector<Vector> std3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const StructureTensor e = extract_structure_constants(tensor_product(c), std3);
  CHECK(check_omega_symmetry(e).passed);
  const Vector x{1, w, 0}, y{0, 2, -1}, z{3, 0, wb};
  CHECK(bracket(e, x, y, z) == omega_commutator_eval(tensor_product(c), x, y, z));
}
