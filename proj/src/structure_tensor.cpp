#include "omegalie/structure_tensor.hpp"

#include "omegalie/eis_poly.hpp"
#include "omegalie/identity_kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace omegalie {

StructureTensor::StructureTensor(std::size_t dim) : dim_(dim) {
  if (dim == 0)
    throw std::invalid_argument("structure tensor dimension must be positive");
  data_.resize(dim * dim * dim * dim);
}

bool StructureTensor::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const EisScalar& x) { return x.is_zero(); });
}

StructureTensor from_independent_2d(const EisScalar& p, const EisScalar& q, const EisScalar& r,
                                    const EisScalar& s) {
  StructureTensor c(2);
  const EisScalar w = EisScalar::omega();
  const EisScalar wb = EisScalar::omega_bar();
  const std::array<EisScalar, 2> v121{p, q};
  const std::array<EisScalar, 2> v212{r, s};
  for (std::size_t m = 0; m < 2; ++m) {
    c(m, 0, 1, 0) = v121[m];
    c(m, 0, 0, 1) = w * v121[m];
    c(m, 1, 0, 0) = wb * v121[m];
    c(m, 1, 0, 1) = v212[m];
    c(m, 1, 1, 0) = w * v212[m];
    c(m, 0, 1, 1) = wb * v212[m];
  }
  return c;
}

StructureTensor from_independent_2d(const Independent2d& v) {
  return from_independent_2d(v[0], v[1], v[2], v[3]);
}

Independent2d independent_2d(const StructureTensor& c) {
  if (c.dim() != 2)
    throw std::invalid_argument("independent constants are defined for dimension 2 only");
  return {c(0, 0, 1, 0), c(1, 0, 1, 0), c(0, 1, 0, 1), c(1, 1, 0, 1)};
}

StructureTensor random_omega_symmetric(std::size_t dim, std::mt19937_64& rng, int lo, int hi) {
  StructureTensor c(dim);
  std::uniform_int_distribution<int> dist(lo, hi);
  const EisScalar w = EisScalar::omega();
  const EisScalar wb = EisScalar::omega_bar();
  for (std::size_t m = 0; m < dim; ++m)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t l = 0; l < dim; ++l) {
          if (i == k && k == l)
            continue;
          // (i, k, l) must be the smallest rotation of its orbit
          if (std::make_tuple(k, l, i) < std::make_tuple(i, k, l) ||
              std::make_tuple(l, i, k) < std::make_tuple(i, k, l))
            continue;
          const EisScalar v(Rational(dist(rng)), Rational(dist(rng)));
          c(m, i, k, l) = v;
          c(m, k, l, i) = wb * v;
          c(m, l, i, k) = w * v;
        }
  return c;
}

CheckReport check_omega_symmetry(const StructureTensor& c, std::size_t limit) {
  const std::size_t n = c.dim();
  const EisScalar w = EisScalar::omega();
  CheckReport report;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          ++report.checked;
          EisScalar residual = c(m, i, k, l) - w * c(m, k, l, i);
          if (residual.is_zero())
            continue;
          ++report.violation_count;
          if (report.violations.size() < limit)
            report.violations.push_back(
                {{int(m) + 1, int(i) + 1, int(k) + 1, int(l) + 1}, std::move(residual)});
        }
  report.passed = report.violation_count == 0;
  return report;
}

CheckReport check_ga15_identity(const StructureTensor& c, std::size_t limit) {
  const auto rows = ga15_rows();
  return check_ga15_identity(c, rows, limit);
}

CheckReport check_ga15_identity(const StructureTensor& c, std::span<const Perm5> elements,
                                std::size_t limit) {
  const auto maps = slot_maps(elements);
  return identity_residuals_parallel(c, maps, limit);
}

CheckReport check_ga15_identity_families(const StructureTensor& c, std::size_t limit) {
  const auto maps = family_slot_maps();
  return identity_residuals_parallel(c, maps, limit);
}

Vector bracket(const StructureTensor& c, const Vector& x, const Vector& y, const Vector& z) {
  const std::size_t n = c.dim();
  if (x.size() != n || y.size() != n || z.size() != n)
    throw std::invalid_argument("bracket arguments must have the tensor's dimension");
  Vector out(n);
  EisScalar xy;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (y[k].is_zero())
        continue;
      xy = x[i] * y[k];
      for (std::size_t l = 0; l < n; ++l) {
        if (z[l].is_zero())
          continue;
        const EisScalar f = xy * z[l];
        for (std::size_t m = 0; m < n; ++m)
          out[m].add_product(c(m, i, k, l), f);
      }
    }
  }
  return out;
}

namespace {

EisMatrix checked_inverse(const StructureTensor& c, const EisMatrix& a) {
  if (a.rows() != c.dim() || a.cols() != c.dim())
    throw std::invalid_argument("basis change matrix must be square of the tensor's dimension");
  auto inv = inverse(a);
  if (!inv)
    throw std::domain_error("basis change matrix is singular");
  return *inv;
}

} // namespace

StructureTensor change_basis(const StructureTensor& c, const EisMatrix& a) {
  const EisMatrix b = checked_inverse(c, a);
  const std::size_t n = c.dim();
  // e'_j = B(i, j) e_i, so covariant slots contract with B and the
  // contravariant slot with A. One slot at a time keeps the cost at n^5.
  StructureTensor cur = c;
  for (int slot = 0; slot < 4; ++slot) {
    StructureTensor next(n);
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            EisScalar& out = next(m, i, k, l);
            for (std::size_t j = 0; j < n; ++j) {
              switch (slot) {
                case 0: out.add_product(a(m, j), cur(j, i, k, l)); break;
                case 1: out.add_product(b(j, i), cur(m, j, k, l)); break;
                case 2: out.add_product(b(j, k), cur(m, i, j, l)); break;
                default: out.add_product(b(j, l), cur(m, i, k, j)); break;
              }
            }
          }
    cur = std::move(next);
  }
  return cur;
}

Independent2d transform_2d_closed_form(const Independent2d& v, const EisMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2)
    throw std::invalid_argument("closed form needs a 2x2 matrix");
  const EisScalar det = determinant(a);
  if (det.is_zero())
    throw std::domain_error("basis change matrix is singular");
  const EisScalar& x = a(0, 0);
  const EisScalar& y = a(0, 1);
  const EisScalar& z = a(1, 0);
  const EisScalar& u = a(1, 1);
  const std::array<std::array<EisScalar, 4>, 4> t{{
      {x * u, y * u, x * z, y * z},
      {z * u, u * u, z * z, z * u},
      {x * y, y * y, x * x, x * y},
      {y * z, y * u, x * z, x * u},
  }};
  const EisScalar scale = (det * det).inverse();
  Independent2d out;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t k = 0; k < 4; ++k)
      out[r].add_product(t[r][k], v[k]);
    out[r] *= scale;
  }
  return out;
}

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vector> basis)
    : ambient_(ambient_dim), basis_(std::move(basis)) {
  EisMatrix m(ambient_, basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (basis_[j].size() != ambient_)
      throw std::invalid_argument("subspace vector has the wrong length");
    for (std::size_t i = 0; i < ambient_; ++i)
      m(i, j) = basis_[j][i];
  }
  if (rank(m) != basis_.size())
    throw std::invalid_argument("subspace basis is linearly dependent");
}

Subspace Subspace::span_of(const Vector& v) { return Subspace(v.size(), {v}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> basis;
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    Vector e(ambient_dim);
    e[j] = 1;
    basis.push_back(std::move(e));
  }
  return Subspace(ambient_dim, std::move(basis));
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("vector has the wrong length");
  EisMatrix m(ambient_, basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j)
    for (std::size_t i = 0; i < ambient_; ++i)
      m(i, j) = basis_[j][i];
  return solve_linear(m, EisMatrix::column(v)).solution.has_value();
}

bool is_ideal(const StructureTensor& c, const Subspace& ideal) {
  const std::size_t n = c.dim();
  if (ideal.ambient_dim() != n)
    throw std::invalid_argument("subspace and tensor have different dimensions");
  const Subspace all = Subspace::full(n);
  for (const auto& a : ideal.basis())
    for (const auto& x : all.basis())
      for (const auto& y : all.basis())
        if (!ideal.contains(bracket(c, a, x, y)))
          return false;
  return true;
}

IdealSearch find_one_dim_ideals_2d(const StructureTensor& c) {
  if (c.dim() != 2)
    throw std::invalid_argument("ideal search is implemented for dimension 2 only");
  IdealSearch result;
  // For v = (1, t), [v, e_x, e_y] is parallel to v iff
  // C^2_{1xy} + t (C^2_{2xy} - C^1_{1xy}) - t^2 C^1_{2xy} = 0.
  EisPoly g;
  bool e2_line = true;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) {
      EisPoly cond({c(1, 0, x, y), c(1, 1, x, y) - c(0, 0, x, y), -c(0, 1, x, y)});
      g = gcd(g, cond);
      if (!c(0, 1, x, y).is_zero())
        e2_line = false;
    }
  if (g.is_zero()) {
    result.all_subspaces = true;
    return result;
  }
  if (g.degree() >= 1) {
    bool complete = true;
    for (const auto& t : roots_low_degree(g, complete))
      result.ideals.push_back(Subspace::span_of({EisScalar(1), t}));
    if (!complete)
      result.unresolved = to_string(g);
  }
  if (e2_line)
    result.ideals.push_back(Subspace::span_of({EisScalar(0), EisScalar(1)}));
  return result;
}

Simplicity is_simple_2d(const StructureTensor& c) {
  if (c.is_zero())
    return Simplicity::NotSimple;
  const IdealSearch s = find_one_dim_ideals_2d(c);
  if (s.all_subspaces || !s.ideals.empty())
    return Simplicity::NotSimple;
  return s.unresolved ? Simplicity::Indeterminate : Simplicity::Simple;
}

const char* to_string(Simplicity s) {
  switch (s) {
    case Simplicity::Simple: return "simple";
    case Simplicity::NotSimple: return "not simple";
    case Simplicity::Indeterminate: return "indeterminate";
  }
  return "?";
}

} // namespace omegalie
