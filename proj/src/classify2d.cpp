#include "omegalie/classify2d.hpp"

#include <array>
#include <utility>

namespace omegalie {

const char* to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::I: return "I";
    case ClassLabel::II: return "II";
    case ClassLabel::III: return "III";
    case ClassLabel::IV: return "IV";
  }
  return "?";
}

ClassLabel parse_class_label(const std::string& text) {
  for (auto l : {ClassLabel::I, ClassLabel::II, ClassLabel::III, ClassLabel::IV})
    if (text == to_string(l))
      return l;
  throw std::invalid_argument("unknown class label: " + text);
}

Independent2d canonical_constants(ClassLabel label) {
  switch (label) {
    case ClassLabel::I: return {0, 0, 0, 0};
    case ClassLabel::II: return {0, 1, 1, 0};
    case ClassLabel::III: return {0, 1, 0, 0};
    case ClassLabel::IV: return {1, 0, 0, -1};
  }
  throw std::invalid_argument("unknown class label");
}

StructureTensor canonical(ClassLabel label) {
  return from_independent_2d(canonical_constants(label));
}

ClassInvariants invariants_of(const Independent2d& v) {
  const auto& [p, q, r, s] = v;
  ClassInvariants inv;
  inv.is_zero = p.is_zero() && q.is_zero() && r.is_zero() && s.is_zero();
  inv.in_W = p == s;
  inv.disc_zero = (p * p - q * r).is_zero();
  inv.in_V = q.is_zero() && r.is_zero() && (p + s).is_zero();
  return inv;
}

ClassLabel label_of(const ClassInvariants& inv) {
  if (inv.is_zero)
    return ClassLabel::I;
  if (!inv.in_W)
    return ClassLabel::IV;
  return inv.disc_zero ? ClassLabel::III : ClassLabel::II;
}

ClassReport classify(const StructureTensor& c, bool with_witness) {
  if (c.dim() != 2)
    throw std::invalid_argument("classification needs a 2-dimensional tensor");
  if (!check_omega_symmetry(c, 1).passed)
    throw NotOmegaSymmetric("tensor is not w-symmetric");
  const Independent2d v = independent_2d(c);
  ClassReport report;
  report.invariants = invariants_of(v);
  report.label = label_of(report.invariants);
  if (with_witness)
    report.witness = iso_witness(v, canonical_constants(report.label)).witness;
  return report;
}

namespace {

struct Split {
  EisMatrix form;  // [[c, a], [a, b]]
  EisScalar lambda;
};

Split split(const Independent2d& v) {
  const EisScalar half = Rational(1, 2);
  const EisScalar a = (v[0] + v[3]) * half;
  return {EisMatrix{{v[2], a}, {a, v[1]}}, (v[0] - v[3]) * half};
}

struct Diagonalized {
  EisMatrix p;  // p m p^T == diag(d0, d1), d0 != 0 unless m == 0
  EisScalar d0, d1;
};

Diagonalized diagonalize(const EisMatrix& m) {
  EisMatrix p = EisMatrix::identity(2);
  EisMatrix cur = m;
  auto apply = [&](const EisMatrix& step) {
    p = step * p;
    cur = step * cur * step.transpose();
  };
  if (cur(0, 0).is_zero() && !cur(1, 1).is_zero())
    apply(EisMatrix{{0, 1}, {1, 0}});
  else if (cur(0, 0).is_zero() && !cur(0, 1).is_zero())
    apply(EisMatrix{{1, 1}, {0, 1}});
  if (!cur(0, 0).is_zero())
    apply(EisMatrix{{1, 0}, {-cur(0, 1) / cur(0, 0), 1}});
  return {p, cur(0, 0), cur(1, 1)};
}

std::vector<EisScalar> search_values() {
  std::vector<EisScalar> out;
  for (int q = 1; q <= 4; ++q)
    for (int m = -4; m <= 4; ++m)
      for (int n = -4; n <= 4; ++n)
        out.emplace_back(make_rational(m, q), make_rational(n, q));
  return out;
}

// Q with Q diag(a0, a1) Q^T == diag(b0, b1), both of rank 2.
std::optional<EisMatrix> diagonal_congruence(const EisScalar& a0, const EisScalar& a1,
                                             const EisScalar& b0, const EisScalar& b1) {
  auto s = sqrt_in_field(b1 / (a0 * a1 * b0));
  if (!s)
    return std::nullopt;
  static const std::vector<EisScalar> values = search_values();
  for (const auto& x : values) {
    auto y = sqrt_in_field((b0 - a0 * x * x) / a1);
    if (!y)
      continue;
    // second row is a0 a1-orthogonal to (x, y)
    return EisMatrix{{x, *y}, {-*s * a1 * *y, *s * a0 * x}};
  }
  return std::nullopt;
}

} // namespace

std::optional<EisMatrix> find_congruence(const EisMatrix& m1, const EisMatrix& m2,
                                         const std::optional<EisScalar>& det) {
  const std::size_t r1 = rank(m1), r2 = rank(m2);
  if (r1 != r2)
    return std::nullopt;
  const Diagonalized d1 = diagonalize(m1);
  const Diagonalized d2 = diagonalize(m2);
  const EisMatrix p2_inv = *inverse(d2.p);
  const EisScalar det_p = determinant(d1.p) / determinant(d2.p);

  EisMatrix q;
  if (r1 == 0) {
    q = EisMatrix::identity(2);
    if (det)
      q(0, 0) = *det / det_p;
  } else if (r1 == 1) {
    auto x = sqrt_in_field(d2.d0 / d1.d0);
    if (!x)
      return std::nullopt;
    EisScalar y = det ? *det / (det_p * *x) : EisScalar(1);
    q = EisMatrix{{*x, 0}, {0, y}};
  } else {
    auto found = diagonal_congruence(d1.d0, d1.d1, d2.d0, d2.d1);
    if (!found)
      return std::nullopt;
    q = *found;
    if (det && !(determinant(q) * det_p == *det)) {
      // diag(1, -1) preserves diag(a0, a1) and flips the determinant
      q(0, 1) = -q(0, 1);
      q(1, 1) = -q(1, 1);
      if (!(determinant(q) * det_p == *det))
        return std::nullopt;
    }
  }
  EisMatrix b = p2_inv * q * d1.p;
  if (!(b * m1 * b.transpose() == m2) || determinant(b).is_zero())
    return std::nullopt;
  return b;
}

namespace {

// (0,1,0,0) -> (a, b, c, a) with a^2 = b c by the triangular family
// [[1/sqrt(b), sqrt(c)/sqrt(b)], [0, 1]] or, for b = 0, [[0, 1], [1/sqrt(c), 0]].
std::optional<EisMatrix> canonical_iii_family(const Independent2d& dst) {
  const EisScalar& a = dst[0];
  const EisScalar& b = dst[1];
  const EisScalar& c = dst[2];
  if (!b.is_zero()) {
    auto sb = sqrt_in_field(b);
    auto sc = sqrt_in_field(c);
    if (!sb || !sc)
      return std::nullopt;
    EisScalar root_c = (*sb * *sc == a) ? *sc : -*sc;
    return EisMatrix{{sb->inverse(), root_c / *sb}, {0, 1}};
  }
  if (!c.is_zero()) {
    auto sc = sqrt_in_field(c);
    if (!sc)
      return std::nullopt;
    return EisMatrix{{0, 1}, {sc->inverse(), 0}};
  }
  return std::nullopt;
}

bool sends(const Independent2d& src, const EisMatrix& a, const Independent2d& dst) {
  return !determinant(a).is_zero() && transform_2d_closed_form(src, a) == dst;
}

} // namespace

IsoResult iso_witness(const Independent2d& src, const Independent2d& dst) {
  if (src == dst)
    return {EisMatrix::identity(2), reason_isomorphic};
  const ClassInvariants is = invariants_of(src), id = invariants_of(dst);
  if (label_of(is) != label_of(id))
    return {std::nullopt, reason_not_isomorphic};

  const Split s = split(src), d = split(dst);
  std::optional<EisMatrix> a;
  if (label_of(is) == ClassLabel::IV) {
    const EisScalar det = s.lambda / d.lambda;
    const std::size_t rs = rank(s.form), rd = rank(d.form);
    if (rs != rd || (rs == 2 && !(determinant(s.form) == det * det * determinant(d.form))))
      return {std::nullopt, reason_w_differs};
    a = find_congruence(s.form, det * det * d.form, det);
  } else {
    if (src == canonical_constants(ClassLabel::III))
      a = canonical_iii_family(dst);
    if (!a || !sends(src, *a, dst)) {
      a.reset();
      if (auto b = find_congruence(s.form, d.form))
        a = *b * determinant(*b).inverse();
    }
  }
  if (a && sends(src, *a, dst))
    return {a, reason_isomorphic};
  return {std::nullopt, reason_no_witness};
}

IsoResult iso_witness(const StructureTensor& src, const StructureTensor& dst) {
  for (const auto* c : {&src, &dst}) {
    if (c->dim() != 2)
      throw std::invalid_argument("isomorphism search needs 2-dimensional tensors");
    if (!check_omega_symmetry(*c, 1).passed)
      throw NotOmegaSymmetric("tensor is not w-symmetric");
  }
  return iso_witness(independent_2d(src), independent_2d(dst));
}

const char* to_string(IdealStructure s) {
  switch (s) {
    case IdealStructure::Abelian: return "abelian";
    case IdealStructure::Simple: return "simple";
    case IdealStructure::HasIdeal: return "has-ideal";
    case IdealStructure::Indeterminate: return "indeterminate";
  }
  return "?";
}

SimplicityEntry simplicity_of(const StructureTensor& c) {
  SimplicityEntry e;
  if (c.is_zero()) {
    e.structure = IdealStructure::Abelian;
    return e;
  }
  IdealSearch found = find_one_dim_ideals_2d(c);
  if (found.all_subspaces || !found.ideals.empty()) {
    e.structure = IdealStructure::HasIdeal;
    e.ideals = std::move(found.ideals);
    return e;
  }
  e.structure = found.unresolved ? IdealStructure::Indeterminate : IdealStructure::Simple;
  return e;
}

std::map<ClassLabel, SimplicityEntry> simplicity_table() {
  std::map<ClassLabel, SimplicityEntry> out;
  for (auto l : {ClassLabel::I, ClassLabel::II, ClassLabel::III, ClassLabel::IV})
    out.emplace(l, simplicity_of(canonical(l)));
  return out;
}

} // namespace omegalie
