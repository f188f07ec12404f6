#include "omegalie/free_ternary.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace omegalie {

Term::Term(std::vector<Generator> letters, Nesting nesting)
    : letters_(std::move(letters)), nesting_(nesting) {}

Term Term::leaf(Generator g) { return Term({g}, Nesting::None); }

Term Term::flat(std::vector<Generator> word) {
  if (word.size() != 1 && word.size() != 3 && word.size() != 5)
    throw UnsupportedDepth("flat words must have 1, 3 or 5 letters");
  return Term(std::move(word), Nesting::None);
}

Term Term::nested(std::vector<Generator> word, Nesting where) {
  if (word.size() != 5 || where == Nesting::None)
    throw std::invalid_argument("nested terms have five letters and a nesting position");
  return Term(std::move(word), where);
}

Term product(const Term& x, const Term& y, const Term& z) {
  const std::array<const Term*, 3> factors{&x, &y, &z};
  std::vector<Generator> word;
  int triple_at = -1;
  for (int i = 0; i < 3; ++i) {
    const Term& f = *factors[i];
    if (f.degree() == 3 && f.nesting() == Nesting::None && triple_at < 0)
      triple_at = i;
    else if (f.degree() != 1)
      throw UnsupportedDepth("product would nest deeper than one triple inside a quintic term");
    word.insert(word.end(), f.letters().begin(), f.letters().end());
  }
  if (triple_at < 0)
    return Term::flat(std::move(word));
  static constexpr std::array<Nesting, 3> where{Nesting::Left, Nesting::Middle, Nesting::Right};
  return Term::nested(std::move(word), where[triple_at]);
}

FreePoly FreePoly::generator(Generator g) { return term(Term::leaf(g)); }

FreePoly FreePoly::term(Term t, EisScalar coeff) {
  FreePoly p;
  p.add(t, coeff);
  return p;
}

void FreePoly::add(const Term& t, const EisScalar& coeff) {
  if (coeff.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(t, coeff);
  if (inserted)
    return;
  it->second += coeff;
  if (it->second.is_zero())
    terms_.erase(it);
}

EisScalar FreePoly::coefficient(const Term& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? EisScalar{} : it->second;
}

FreePoly& FreePoly::operator+=(const FreePoly& o) {
  for (const auto& [t, c] : o.terms_)
    add(t, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o) {
  for (const auto& [t, c] : o.terms_)
    add(t, -c);
  return *this;
}

FreePoly& FreePoly::operator*=(const EisScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_)
    c *= s;
  return *this;
}

FreePoly product(const FreePoly& x, const FreePoly& y, const FreePoly& z) {
  FreePoly out;
  for (const auto& [tx, cx] : x)
    for (const auto& [ty, cy] : y)
      for (const auto& [tz, cz] : z)
        out.add(product(tx, ty, tz), cx * cy * cz);
  return out;
}

namespace {

Term normalize_term(const Term& t, AssocKind kind) {
  if (t.nesting() == Nesting::None || kind == AssocKind::Free)
    return t;
  std::vector<Generator> w = t.letters();
  if (kind == AssocKind::Second && t.nesting() == Nesting::Middle)
    std::swap(w[1], w[3]);
  return Term::flat(std::move(w));
}

// Coefficients of abc, bca, cab, cba, bac, acb.
FreePoly six_term(const FreePoly& a, const FreePoly& b, const FreePoly& c,
                  const std::array<EisScalar, 6>& k) {
  FreePoly out;
  out += k[0] * product(a, b, c);
  out += k[1] * product(b, c, a);
  out += k[2] * product(c, a, b);
  out += k[3] * product(c, b, a);
  out += k[4] * product(b, a, c);
  out += k[5] * product(a, c, b);
  return out;
}

std::size_t raw_size(const FreePoly& a, const FreePoly& b, const FreePoly& c) {
  return 6 * a.size() * b.size() * c.size();
}

OmegaExpansion expand_double_commutators(const std::vector<std::array<Generator, 5>>& seqs) {
  OmegaExpansion out;
  for (const auto& s : seqs) {
    FreePoly inner = omega_commutator(FreePoly::generator(s[0]), FreePoly::generator(s[1]),
                                      FreePoly::generator(s[2]));
    FreePoly g4 = FreePoly::generator(s[3]);
    FreePoly g5 = FreePoly::generator(s[4]);
    out.raw_terms += raw_size(inner, g4, g5);
    out.polynomial += omega_commutator(inner, g4, g5);
    ++out.double_commutators;
  }
  return out;
}

} // namespace

FreePoly normalize(const FreePoly& p, AssocKind kind) {
  FreePoly out;
  for (const auto& [t, c] : p) {
    if (t.degree() > 5)
      throw UnsupportedDepth("normalize supports at most five letters");
    out.add(normalize_term(t, kind), c);
  }
  return out;
}

AssociatorCoefficients default_associator_coefficients() {
  return {EisScalar(1), EisScalar::omega_bar(), EisScalar::omega()};
}

FreePoly omega_associator(const std::array<Generator, 5>& l, AssociatorKind kind,
                          const AssociatorCoefficients& coeffs) {
  std::array<EisScalar, 3> roots{EisScalar(1), EisScalar::omega(), EisScalar::omega_bar()};
  for (const auto& r : roots)
    if (std::count(coeffs.begin(), coeffs.end(), r) != 1)
      throw std::invalid_argument("associator coefficients must be an ordering of 1, w, w_bar");
  const auto [a, b, c, g, h] = l;
  FreePoly p;
  p.add(Term::nested({a, b, c, g, h}, Nesting::Left), coeffs[0]);
  if (kind == AssociatorKind::First)
    p.add(Term::nested({a, b, c, g, h}, Nesting::Middle), coeffs[1]);
  else
    p.add(Term::nested({a, g, c, b, h}, Nesting::Middle), coeffs[1]);
  p.add(Term::nested({a, b, c, g, h}, Nesting::Right), coeffs[2]);
  return p;
}

FreePoly omega_commutator(const FreePoly& a, const FreePoly& b, const FreePoly& c) {
  const EisScalar w = EisScalar::omega();
  const EisScalar wb = EisScalar::omega_bar();
  return six_term(a, b, c, {1, w, wb, 1, wb, w});
}

FreePoly omega_commutator_reflected(const FreePoly& a, const FreePoly& b, const FreePoly& c) {
  const EisScalar w = EisScalar::omega();
  const EisScalar wb = EisScalar::omega_bar();
  return six_term(a, b, c, {1, wb, w, 1, w, wb});
}

FreePoly reflect_poly(const FreePoly& p) {
  FreePoly out;
  for (const auto& [t, c] : p)
    out.add(t, c.reflect());
  return out;
}

FreePoly alternating_sum(const FreePoly& a, const FreePoly& b, const FreePoly& c) {
  return six_term(a, b, c, {1, 1, 1, -1, -1, -1});
}

OmegaExpansion omega_polynomial(AssocKind kind, std::span<const Perm5> elements) {
  std::vector<std::array<Generator, 5>> seqs;
  seqs.reserve(elements.size());
  for (const auto& rho : elements)
    seqs.push_back({rho(1), rho(2), rho(3), rho(4), rho(5)});
  OmegaExpansion e = expand_double_commutators(seqs);
  e.polynomial = normalize(e.polynomial, kind);
  return e;
}

OmegaExpansion omega_polynomial(AssocKind kind) {
  const auto rows = ga15_rows();
  return omega_polynomial(kind, rows);
}

std::array<std::array<Generator, 5>, 4> omega_family_seeds() {
  return {{{1, 2, 3, 4, 5}, {1, 4, 2, 5, 3}, {1, 5, 4, 3, 2}, {1, 3, 5, 2, 4}}};
}

OmegaExpansion omega_polynomial_by_families() {
  std::vector<std::array<Generator, 5>> seqs;
  for (const auto& seed : omega_family_seeds())
    for (int k = 0; k < 5; ++k) {
      std::array<Generator, 5> rotated{};
      for (int j = 0; j < 5; ++j)
        rotated[j] = seed[(j + k) % 5];
      seqs.push_back(rotated);
    }
  return expand_double_commutators(seqs);
}

CyclicSymmetryResult cyclic_symmetry_check() {
  const FreePoly a = FreePoly::generator(1);
  const FreePoly b = FreePoly::generator(2);
  const FreePoly c = FreePoly::generator(3);
  const EisScalar w = EisScalar::omega();
  const EisScalar wb = EisScalar::omega_bar();
  const FreePoly abc = omega_commutator(a, b, c);
  const FreePoly abc_r = omega_commutator_reflected(a, b, c);
  CyclicSymmetryResult r;
  r.commutator = (abc - w * omega_commutator(b, c, a)).is_zero() &&
                 (abc - wb * omega_commutator(c, a, b)).is_zero();
  r.reflected = (abc_r - wb * omega_commutator_reflected(b, c, a)).is_zero() &&
                (abc_r - w * omega_commutator_reflected(c, a, b)).is_zero();
  r.reversal_is_reflection = omega_commutator(c, b, a) == reflect_poly(abc);
  return r;
}

std::string to_string(const Term& t, std::span<const std::string> names) {
  auto name = [&](Generator g) {
    if (g >= 1 && static_cast<std::size_t>(g) <= names.size())
      return names[g - 1];
    return "a" + std::to_string(g);
  };
  std::size_t open = 5, close = 5;
  switch (t.nesting()) {
    case Nesting::Left: open = 0; break;
    case Nesting::Middle: open = 1; break;
    case Nesting::Right: open = 2; break;
    case Nesting::None: break;
  }
  if (open < 5)
    close = open + 2;
  std::string out;
  for (std::size_t i = 0; i < t.letters().size(); ++i) {
    if (i == open)
      out += '(';
    out += name(t.letters()[i]);
    if (i == close)
      out += ')';
  }
  return out;
}

std::string to_string(const FreePoly& p, std::span<const std::string> names) {
  if (p.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : p) {
    if (!first)
      os << " + ";
    first = false;
    if (c == EisScalar(1))
      os << to_string(t, names);
    else if (c.is_rational() || c.a() == 0)
      os << to_string(c) << '*' << to_string(t, names);
    else
      os << '(' << to_string(c) << ")*" << to_string(t, names);
  }
  return os.str();
}

} // namespace omegalie
