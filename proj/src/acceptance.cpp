#include "omegalie/acceptance.hpp"

#include "omegalie/classify2d.hpp"
#include "omegalie/free_ternary.hpp"
#include "omegalie/matrix_constructions.hpp"
#include "omegalie/structure_tensor.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace omegalie {

namespace {

// Collects named sub-checks; the criterion passes when none failed.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok)
      failed_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool passed() const { return failed_.empty(); }
  std::string detail() const {
    std::ostringstream os;
    if (failed_.empty()) {
      os << total_ << " checks";
    } else {
      os << failed_.size() << " of " << total_ << " checks failed:";
      for (const auto& f : failed_)
        os << " [" << f << "]";
    }
    for (const auto& n : notes_)
      os << "; " << n;
    return os.str();
  }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failed_;
  std::vector<std::string> notes_;
};

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{seed, stream};
  return std::mt19937_64(seq);
}

EisMatrix random_regular(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    EisMatrix a = random_like(EisMatrix(n, n), rng);
    if (!determinant(a).is_zero())
      return a;
  }
}

Independent2d random_independent(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  Independent2d v;
  for (auto& x : v)
    x = EisScalar(Rational(dist(rng)), Rational(dist(rng)));
  return v;
}

void symbolic_identity(Checks& c, const AcceptanceOptions& o) {
  const std::vector<Perm5> elements = o.elements ? *o.elements : ga15_rows();
  const OmegaExpansion first = omega_polynomial(AssocKind::First, elements);
  const OmegaExpansion second = omega_polynomial(AssocKind::Second, elements);
  const OmegaExpansion free = omega_polynomial(AssocKind::Free, elements);
  c.expect(first.polynomial.is_zero(), "Omega vanishes modulo first-kind associativity");
  c.expect(second.polynomial.is_zero(), "Omega vanishes modulo second-kind associativity");
  c.expect(!free.polynomial.is_zero(), "Omega is nonzero in the free algebra");
  c.expect(free.raw_terms == 720, "720 raw terms before merging");
  c.note("free expansion: " + std::to_string(free.raw_terms) + " raw, " +
         std::to_string(free.polynomial.size()) + " merged terms");
}

void group_structure(Checks& c, const AcceptanceOptions&) {
  const Perm5 s = sigma(), t = tau(), e{};
  const std::vector<Perm5> gens{s, t};
  const PermSet g = generate(gens);
  c.expect(g.size() == 20, "|<sigma, tau>| = 20");
  c.expect(power(s, 5) == e && power(t, 4) == e, "sigma^5 = tau^4 = e");
  c.expect(compose(compose(t, s), inverse(t)) == power(s, 2), "tau sigma tau^-1 = sigma^2");
  const auto rows = ga15_rows();
  c.expect(PermSet(rows.begin(), rows.end()) == g && rows.size() == 20,
           "every element is sigma^k tau^j for exactly one (k, j)");
  const std::vector<Perm5> n_gen{s}, h_gen{t};
  const PermSet n = generate(n_gen), h = generate(h_gen);
  c.expect(is_normal(n, g), "N = <sigma> is normal");
  c.expect(!is_normal(h, g), "H = <tau> is not normal");
  bool hom = true;
  std::set<Perm5> image;
  for (const auto& m1 : affine_group()) {
    image.insert(affine_to_perm(m1));
    for (const auto& m2 : affine_group())
      for (int x = 1; x <= 5; ++x)
        hom = hom && affine_to_perm(affine_compose(m1, m2))(x) ==
                         affine_to_perm(m1)(affine_to_perm(m2)(x));
  }
  c.expect(hom, "affine_to_perm(m1 m2) = affine_to_perm(m1) affine_to_perm(m2) on 400 pairs");
  c.expect(image == g, "affine_to_perm is onto <sigma, tau>");
}

void commutator_calculus(Checks& c, const AcceptanceOptions& o) {
  const FreePoly a = FreePoly::generator(1), b = FreePoly::generator(2);
  c.expect(cyclic_symmetry_check().all(), "[a,b,c] = w[b,c,a] and [c,b,a] = reflect([a,b,c])");
  c.expect(omega_commutator(a, a, a).is_zero(), "[a,a,a] = 0");
  const FreePoly expected = EisScalar(2) * product(a, b, a) - product(b, a, a) - product(a, a, b);
  c.expect(omega_commutator(a, b, a) == expected, "[a,b,a] = 2aba - baa - aab");
  const EisScalar w = EisScalar::omega(), wb = EisScalar::omega_bar();
  const std::array<AssociatorCoefficients, 6> orders{{{1, w, wb},
                                                      {1, wb, w},
                                                      {w, 1, wb},
                                                      {w, wb, 1},
                                                      {wb, 1, w},
                                                      {wb, w, 1}}};
  bool rational = true;
  for (auto kind : {AssociatorKind::First, AssociatorKind::Second})
    for (const auto& k : orders) {
      const FreePoly assoc = omega_associator({1, 2, 3, 4, 5}, kind, k);
      for (const auto& [term, coeff] : assoc + reflect_poly(assoc))
        rational = rational && coeff.is_rational();
    }
  c.expect(rational, "associator + reflect has rational coefficients");
  auto rng = make_rng(o.seed, 3);
  const auto prod = binary_derived_product();
  const RectMatrix e = EisMatrix::identity(2);
  bool biunit = true;
  for (int trial = 0; trial < 20; ++trial) {
    const RectMatrix x = random_like(EisMatrix(2, 2), rng);
    biunit = biunit && prod(e, x, e) == x && prod(x, e, e) == x && prod(e, e, x) == x &&
             omega_commutator_eval(prod, e, x, e).is_zero();
  }
  c.expect(biunit, "identity is a biunit and [e,a,e] = 0 in the binary-derived algebra");
}

void dim2_identity(Checks& c, const AcceptanceOptions& o) {
  auto rng = make_rng(o.seed, 4);
  std::size_t failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const StructureTensor t = from_independent_2d(random_independent(rng));
    if (!check_omega_symmetry(t).passed || !check_ga15_identity(t).passed)
      ++failures;
  }
  c.expect(failures == 0, "200 random 2-dimensional w-symmetric tensors satisfy the identity");
}

void constructions(Checks& c, const AcceptanceOptions& o) {
  const std::size_t trials = 50;
  c.expect(associativity_probe(rect_transpose_product(), Associativity::Second, trials, o.seed,
                               EisMatrix(3, 2))
               .check.passed,
           "A B^T C on 3x2 is second-kind associative");
  for (auto form : {CubicForm::Beta, CubicForm::Gamma})
    for (std::size_t n : {2, 3}) {
      const auto prod = cubic_product(form);
      c.expect(associativity_probe(prod, Associativity::Second, trials, o.seed, CubicMatrix(n))
                   .check.passed,
               prod.name + " order " + std::to_string(n) + " is second-kind associative");
    }
  auto rng = make_rng(o.seed, 5);
  bool condition = true, slice = true;
  for (std::size_t t = 0; t < trials; ++t) {
    const CubicMatrix u = random_like(CubicMatrix(2), rng), v = random_like(CubicMatrix(2), rng);
    const CubicMatrix y = random_like(CubicMatrix(2), rng), z = random_like(CubicMatrix(2), rng);
    condition = condition && beta_form(cubic_right_action(u, beta_form(z, y)), v) ==
                                 beta_form(y, cubic_right_action(z, beta_form(u, v)));
    const CubicMatrix x3 = random_like(CubicMatrix(3), rng), y3 = random_like(CubicMatrix(3), rng);
    const EisMatrix beta = beta_form(x3, y3);
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t k = 0; k < 3; ++k) {
        const EisMatrix prod = third_index_slice(x3, p) * third_index_slice(y3, k);
        EisScalar trace;
        for (std::size_t i = 0; i < 3; ++i)
          trace += prod(i, i);
        slice = slice && beta(p, k) == trace;
      }
  }
  c.expect(condition, "beta(u.beta(z,y), v) = beta(y, z.beta(u,v))");
  c.expect(slice, "beta(X,Y)_pk = Tr(X_(p) Y_(k))");
  const auto probe = associativity_probe(rect_transpose_product(), Associativity::First, trials,
                                         o.seed, EisMatrix(2, 2));
  c.expect(!probe.check.passed && probe.witness.has_value(),
           "random search finds a first-kind failure of A B^T C");
  // stored witness: a = g = h = I, b = E11, c = E12
  const RectMatrix i2 = EisMatrix::identity(2);
  const RectMatrix e11{{1, 0}, {0, 0}}, e12{{0, 1}, {0, 0}};
  c.expect(rect_triple(rect_triple(i2, e11, e12), i2, i2) !=
               rect_triple(i2, rect_triple(e11, e12, i2), i2),
           "stored first-kind witness still fails");
}

void vector_algebra(Checks& c, const AcceptanceOptions&) {
  const StructureTensor cyc = vector_structure_constants(2, VectorVariant::Cyclic);
  const Vector e1{1, 0}, e2{0, 1};
  c.expect(bracket(cyc, e1, e2, e1) == e2, "[e1,e2,e1] = e2");
  c.expect(bracket(cyc, e2, e1, e2) == e1, "[e2,e1,e2] = e1");
  for (std::size_t n : {2, 3}) {
    const StructureTensor extracted =
        extract_structure_constants(rect_transpose_product(), matrix_unit_basis(1, n));
    c.expect(extracted == vector_structure_constants(n, VectorVariant::Full),
             "1x" + std::to_string(n) + " extraction equals the negated formula tensor");
  }
}

void traceless_order2(Checks& c, const AcceptanceOptions&) {
  c.expect(traceless_dimension(2) == 2, "traceless order-2 cubic matrices form a 2-dim space");
  const TracelessBasis t = traceless_basis_order2();
  c.expect(is_traceless(t.e1) && is_traceless(t.e2), "E1, E2 are traceless");
  const auto prod = cubic_product(CubicForm::Beta);
  c.expect(omega_commutator_eval(prod, t.e1, t.e2, t.e1) == EisScalar(-8) * t.e2,
           "[E1,E2,E1] = -8 E2");
  c.expect(omega_commutator_eval(prod, t.e2, t.e1, t.e2) == EisScalar(-8) * t.e1,
           "[E2,E1,E2] = -8 E1");
  const StructureTensor ext = extract_structure_constants(prod, std::vector{t.e1, t.e2});
  c.expect(independent_2d(ext) == Independent2d{0, -8, -8, 0}, "constants (0, -8, -8, 0)");
  c.expect(classify(ext, false).label == ClassLabel::II, "classified as II");
  c.expect(classify(vector_structure_constants(2, VectorVariant::Full), false).label ==
               ClassLabel::II,
           "1x2 vector algebra is also II");
}

void classification(Checks& c, const AcceptanceOptions& o) {
  auto rng = make_rng(o.seed, 8);
  for (auto label : {ClassLabel::I, ClassLabel::II, ClassLabel::III, ClassLabel::IV}) {
    const StructureTensor t = canonical(label);
    const std::string name = to_string(label);
    c.expect(check_omega_symmetry(t).passed && check_ga15_identity(t).passed,
             name + " satisfies both axioms");
    c.expect(classify(t, false).label == label, "classify(canonical " + name + ")");
    std::size_t mismatches = 0;
    for (int trial = 0; trial < 100; ++trial)
      if (classify(change_basis(t, random_regular(2, rng)), false).label != label)
        ++mismatches;
    c.expect(mismatches == 0, name + " is stable under 100 basis changes");
  }
  const auto table = simplicity_table();
  c.expect(table.at(ClassLabel::I).structure == IdealStructure::Abelian, "I abelian");
  c.expect(table.at(ClassLabel::II).structure == IdealStructure::Simple, "II simple");
  const auto& iii = table.at(ClassLabel::III);
  c.expect(iii.structure == IdealStructure::HasIdeal && iii.ideals.size() == 1 &&
               iii.ideals[0].contains(Vector{0, 1}),
           "III has exactly the ideal span{e2}");
  c.expect(table.at(ClassLabel::IV).structure == IdealStructure::Simple, "IV simple");
}

void transformation_law(Checks& c, const AcceptanceOptions& o) {
  auto rng = make_rng(o.seed, 9);
  std::uniform_int_distribution<int> dist(-3, 3);
  bool agree = true, eigen = true, w_kept = true, disc_kept = true;
  for (int trial = 0; trial < 100; ++trial) {
    const EisMatrix a = random_regular(2, rng);
    const Independent2d v = random_independent(rng);
    agree = agree && independent_2d(change_basis(from_independent_2d(v), a)) ==
                         transform_2d_closed_form(v, a);
    const Independent2d img = transform_2d_closed_form({1, 0, 0, -1}, a);
    eigen = eigen && img[1].is_zero() && img[2].is_zero() && img[3] == -img[0];
    Independent2d wv = v;
    wv[3] = wv[0];
    const Independent2d wi = transform_2d_closed_form(wv, a);
    w_kept = w_kept && wi[0] == wi[3];
    // (t b, b, t^2 b, t b) lies in W with a^2 = b c
    const EisScalar b(Rational(dist(rng)), Rational(dist(rng)));
    const EisScalar t(Rational(dist(rng)), Rational(dist(rng)));
    const Independent2d di = transform_2d_closed_form({t * b, b, t * t * b, t * b}, a);
    disc_kept = disc_kept && di[0] == di[3] && (di[0] * di[0] - di[1] * di[2]).is_zero();
  }
  c.expect(agree, "closed form equals generic change_basis on 100 matrices");
  c.expect(eigen, "(1,0,0,-1) is an eigenvector");
  c.expect(w_kept, "W is invariant");
  c.expect(disc_kept, "a^2 = bc is preserved within W");
}

void scale_check(Checks& c, const AcceptanceOptions&) {
  const StructureTensor t =
      extract_structure_constants(cubic_product(CubicForm::Beta), cubic_unit_basis(2));
  const CheckReport sym = check_omega_symmetry(t);
  const CheckReport id = check_ga15_identity(t);
  c.expect(sym.passed, "8-dimensional cubic algebra is w-symmetric");
  c.expect(id.passed, "8-dimensional cubic algebra satisfies the identity");
  c.note(std::to_string(id.checked) + " index tuples");
}

struct Criterion {
  const char* title;
  const char* anchor;
  double budget;
  void (*run)(Checks&, const AcceptanceOptions&);
};

const std::array<Criterion, acceptance_criteria> criteria{{
    {"GA(1,5)-identity in the free ternary algebra", "Omega(a1,...,a5) = 0 under either associativity", 5,
     symbolic_identity},
    {"GA(1,5) group structure", "order 20, sigma^5 = tau^4 = e, tau sigma tau^-1 = sigma^2", 1,
     group_structure},
    {"w-commutator calculus", "[a,b,c] = w[b,c,a], [c,b,a] = reflected, [a,a,a] = 0", 0,
     commutator_calculus},
    {"no extra conditions in dimension 2", "every w-symmetric 2-dim tensor satisfies the identity",
     10, dim2_identity},
    {"associative constructions", "A B^T C and cubic beta/gamma products are second-kind associative",
     0, constructions},
    {"vector algebra", "[e1,e2,e1] = e2, [e2,e1,e2] = e1", 0, vector_algebra},
    {"traceless cubic matrices of order 2", "T2 is 2-dimensional and isomorphic to M(1,2)", 0,
     traceless_order2},
    {"classification in dimension 2", "four classes I-IV; II and IV simple, III has ideal span{e2}",
     30, classification},
    {"transformation law", "W and V invariant, a^2 = bc preserved", 0, transformation_law},
    {"8-dimensional cubic algebra", "extracted constants satisfy both axioms", 600, scale_check},
}};

} // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > acceptance_criteria)
    throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  const Criterion& crit = criteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = crit.title;
  r.anchor = crit.anchor;
  r.budget_seconds = crit.budget;
  Checks checks;
  const auto start = std::chrono::steady_clock::now();
  try {
    crit.run(checks, options);
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.budget_seconds > 0 && r.seconds > r.budget_seconds)
    checks.expect(false, "runtime budget exceeded");
  r.passed = checks.passed();
  r.detail = checks.detail();
  return r;
}

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options, const std::function<void(const CriterionResult&)>& progress) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= acceptance_criteria; ++id) {
    if (id == 10 && !options.include_scale_check)
      continue;
    out.push_back(run_criterion(id, options));
    if (progress)
      progress(out.back());
  }
  return out;
}

} // namespace omegalie
