#include "omegalie/classify2d.hpp"

#include <doctest.h>

#include <random>

using namespace omegalie;

namespace {

EisMatrix random_regular(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  for (;;) {
    EisMatrix a{{EisScalar(Rational(d(rng)), Rational(d(rng))), EisScalar(Rational(d(rng)), Rational(d(rng)))},
                {EisScalar(Rational(d(rng)), Rational(d(rng))), EisScalar(Rational(d(rng)), Rational(d(rng)))}};
    if (!determinant(a).is_zero())
      return a;
  }
}

constexpr ClassLabel all_labels[] = {ClassLabel::I, ClassLabel::II, ClassLabel::III,
                                     ClassLabel::IV};

} // namespace

TEST_CASE("canonical forms") {
  CHECK(canonical(ClassLabel::I).is_zero());
  CHECK(canonical_constants(ClassLabel::II) == Independent2d{0, 1, 1, 0});
  CHECK(canonical_constants(ClassLabel::III) == Independent2d{0, 1, 0, 0});
  CHECK(canonical_constants(ClassLabel::IV) == Independent2d{1, 0, 0, -1});
  const StructureTensor four = canonical(ClassLabel::IV);
  CHECK(bracket(four, {1, 0}, {0, 1}, {1, 0}) == Vector{1, 0});
  CHECK(bracket(four, {0, 1}, {1, 0}, {0, 1}) == Vector{0, -1});
  for (ClassLabel l : all_labels) {
    CHECK(check_omega_symmetry(canonical(l)).passed);
    CHECK(check_ga15_identity(canonical(l)).passed);
    CHECK(classify(canonical(l)).label == l);
    CHECK(parse_class_label(to_string(l)) == l);
  }
  CHECK_THROWS_AS(parse_class_label("V"), std::invalid_argument);
}

TEST_CASE("decision rule examples") {
  CHECK(classify(from_independent_2d(0, 1, 1, 0)).label == ClassLabel::II);
  CHECK(classify(from_independent_2d(0, 0, 5, 0)).label == ClassLabel::III);
  CHECK(classify(from_independent_2d(6, 4, 9, 6)).label == ClassLabel::III);
  CHECK(classify(from_independent_2d(0, -8, -8, 0)).label == ClassLabel::II);
  CHECK(classify(from_independent_2d(2, 0, 0, 1)).label == ClassLabel::IV);
  const ClassReport r = classify(from_independent_2d(3, 0, 0, -3));
  CHECK(r.label == ClassLabel::IV);
  CHECK(r.invariants.in_V);
  CHECK_FALSE(r.invariants.in_W);

  StructureTensor bad = canonical(ClassLabel::II);
  bad(0, 0, 0, 1) += 1;
  CHECK_THROWS_AS(classify(bad), NotOmegaSymmetric);
  CHECK_THROWS_AS(classify(StructureTensor(3)), std::invalid_argument);
}

TEST_CASE("labels are invariant under basis changes") {
  std::mt19937_64 rng(67);
  for (ClassLabel l : all_labels)
    for (int t = 0; t < 25; ++t) {
      const EisMatrix a = random_regular(rng);
      const Independent2d v = transform_2d_closed_form(canonical_constants(l), a);
      const ClassReport r = classify(from_independent_2d(v));
      CHECK(r.label == l);
      if (r.witness) {
        CHECK(transform_2d_closed_form(v, *r.witness) == canonical_constants(l));
      }
    }
}

TEST_CASE("p != s never moves into W") {
  std::mt19937_64 rng(71);
  const Independent2d start{2, 0, 0, 1};
  for (int t = 0; t < 200; ++t) {
    const Independent2d v = transform_2d_closed_form(start, random_regular(rng));
    CHECK(v[0] != v[3]);
    CHECK(invariants_of(v).in_W == false);
  }
}

TEST_CASE("invariants are preserved pointwise") {
  std::mt19937_64 rng(73);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int t = 0; t < 100; ++t) {
    const Independent2d v{d(rng), d(rng), d(rng), d(rng)};
    const Independent2d u = transform_2d_closed_form(v, random_regular(rng));
    const ClassInvariants iv = invariants_of(v), iu = invariants_of(u);
    CHECK(iv.is_zero == iu.is_zero);
    CHECK(iv.in_W == iu.in_W);
    CHECK(iv.in_V == iu.in_V);
    if (iv.in_W)
      CHECK(iv.disc_zero == iu.disc_zero);
  }
}

TEST_CASE("isomorphism witnesses") {
  SUBCASE("triangular family") {
    // (0,1,0,0) -> (sqrt(bc), b, c, sqrt(bc)) with b = 4, c = 9
    const Independent2d src{0, 1, 0, 0}, dst{6, 4, 9, 6};
    const EisMatrix expected{{make_rational(1, 2), make_rational(3, 2)}, {0, 1}};
    CHECK(transform_2d_closed_form(src, expected) == dst);
    const IsoResult r = iso_witness(src, dst);
    REQUIRE(r.witness);
    CHECK(transform_2d_closed_form(src, *r.witness) == dst);
    CHECK(r.reason == reason_isomorphic);
  }
  SUBCASE("traceless cubic algebra to canonical II") {
    const IsoResult r = iso_witness(Independent2d{0, -8, -8, 0}, canonical_constants(ClassLabel::II));
    REQUIRE(r.witness);
    CHECK(transform_2d_closed_form({0, -8, -8, 0}, *r.witness) == Independent2d{0, 1, 1, 0});
  }
  SUBCASE("identity") {
    const IsoResult r = iso_witness(canonical(ClassLabel::II), canonical(ClassLabel::II));
    REQUIRE(r.witness);
    CHECK(transform_2d_closed_form({0, 1, 1, 0}, *r.witness) == Independent2d{0, 1, 1, 0});
  }
  SUBCASE("different classes") {
    const IsoResult r = iso_witness(canonical(ClassLabel::II), canonical(ClassLabel::III));
    CHECK_FALSE(r.witness);
    CHECK(r.reason == reason_not_isomorphic);
  }
  SUBCASE("mixed vectors with different W-parts") {
    const IsoResult r = iso_witness(Independent2d{1, 0, 0, -1}, Independent2d{2, 0, 0, 1});
    CHECK_FALSE(r.witness);
    CHECK(r.reason == reason_w_differs);
  }
  SUBCASE("random images of canonical forms") {
    std::mt19937_64 rng(79);
    for (ClassLabel l : all_labels)
      for (int t = 0; t < 5; ++t) {
        const Independent2d src = canonical_constants(l);
        const Independent2d dst = transform_2d_closed_form(src, random_regular(rng));
        const IsoResult r = iso_witness(src, dst);
        CHECK(r.reason != reason_not_isomorphic);
        if (r.witness)
          CHECK(transform_2d_closed_form(src, *r.witness) == dst);
      }
  }
}

TEST_CASE("congruence of symmetric forms") {
  const EisMatrix m1{{1, 0}, {0, 1}}, m2{{2, 1}, {1, 1}};
  const auto b = find_congruence(m1, m2);
  REQUIRE(b);
  CHECK(*b * m1 * b->transpose() == m2);
  const auto fixed = find_congruence(m1, m1, EisScalar(-1));
  REQUIRE(fixed);
  CHECK(determinant(*fixed) == EisScalar(-1));
  CHECK(*fixed * m1 * fixed->transpose() == m1);
  CHECK_FALSE(find_congruence(EisMatrix{{1, 0}, {0, 0}}, m1));
}

TEST_CASE("simplicity table") {
  const auto table = simplicity_table();
  CHECK(table.at(ClassLabel::I).structure == IdealStructure::Abelian);
  CHECK(table.at(ClassLabel::II).structure == IdealStructure::Simple);
  CHECK(table.at(ClassLabel::IV).structure == IdealStructure::Simple);
  const auto& three = table.at(ClassLabel::III);
  CHECK(three.structure == IdealStructure::HasIdeal);
  REQUIRE(three.ideals.size() == 1);
  CHECK(three.ideals[0].contains({0, 1}));
  CHECK_FALSE(three.ideals[0].contains({1, 0}));
}
