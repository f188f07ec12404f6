#include "omegalie/matrix_constructions.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

namespace omegalie {

CubicMatrix::CubicMatrix(std::size_t n) : n_(n) {
  if (n == 0)
    throw std::invalid_argument("cubic matrix order must be positive");
  data_.resize(n * n * n);
}

CubicMatrix CubicMatrix::unit(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  CubicMatrix x(n);
  x(i, j, k) = 1;
  return x;
}

bool CubicMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const EisScalar& e) { return e.is_zero(); });
}

CubicMatrix& CubicMatrix::operator+=(const CubicMatrix& o) {
  if (o.n_ != n_)
    throw std::invalid_argument("cubic matrices of different order");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] += o.data_[i];
  return *this;
}

CubicMatrix& CubicMatrix::operator-=(const CubicMatrix& o) {
  if (o.n_ != n_)
    throw std::invalid_argument("cubic matrices of different order");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] -= o.data_[i];
  return *this;
}

CubicMatrix& CubicMatrix::operator*=(const EisScalar& s) {
  for (auto& e : data_)
    e *= s;
  return *this;
}

namespace {

void require_same_order(const CubicMatrix& x, const CubicMatrix& y) {
  if (x.order() != y.order() || x.order() == 0)
    throw std::invalid_argument("cubic matrices must have the same positive order");
}

} // namespace

RectMatrix rect_triple(const RectMatrix& a, const RectMatrix& b, const RectMatrix& c) {
  if (a.rows() != b.rows() || a.rows() != c.rows() || a.cols() != b.cols() ||
      a.cols() != c.cols())
    throw std::invalid_argument("rect_triple needs three matrices of one shape");
  return a * b.transpose() * c;
}

RectMatrix binary_derived_triple(const RectMatrix& a, const RectMatrix& b, const RectMatrix& c) {
  if (!a.is_square() || a.rows() != b.rows() || a.rows() != c.rows() || !b.is_square() ||
      !c.is_square())
    throw std::invalid_argument("binary_derived_triple needs square matrices of one order");
  return a * b * c;
}

CubicMatrix cubic_right_action(const CubicMatrix& x, const EisMatrix& a) {
  const std::size_t n = x.order();
  if (a.rows() != n || a.cols() != n)
    throw std::invalid_argument("right action needs a square matrix of the cubic order");
  CubicMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (x(i, j, k).is_zero())
          continue;
        for (std::size_t l = 0; l < n; ++l)
          out(i, j, l).add_product(x(i, j, k), a(k, l));
      }
  return out;
}

EisMatrix beta_form(const CubicMatrix& x, const CubicMatrix& y) {
  require_same_order(x, y);
  const std::size_t n = x.order();
  EisMatrix out(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          out(p, k).add_product(x(r, s, p), y(s, r, k));
  return out;
}

EisMatrix gamma_form(const CubicMatrix& x, const CubicMatrix& y) {
  require_same_order(x, y);
  const std::size_t n = x.order();
  EisMatrix out(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          out(p, k).add_product(x(r, s, p), y(r, s, k));
  return out;
}

EisMatrix third_index_slice(const CubicMatrix& x, std::size_t p) {
  const std::size_t n = x.order();
  if (p >= n)
    throw std::invalid_argument("slice index out of range");
  EisMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      out(r, s) = x(r, s, p);
  return out;
}

CubicMatrix cubic_triple(const CubicMatrix& x, const CubicMatrix& y, const CubicMatrix& z,
                         CubicForm form) {
  require_same_order(x, y);
  require_same_order(x, z);
  return cubic_right_action(x, form == CubicForm::Beta ? beta_form(y, z) : gamma_form(y, z));
}

std::array<Vector, 3> traces(const CubicMatrix& x) {
  const std::size_t n = x.order();
  std::array<Vector, 3> t{Vector(n), Vector(n), Vector(n)};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      t[0][j] += x(i, i, j);
      t[1][j] += x(i, j, i);
      t[2][j] += x(j, i, i);
    }
  return t;
}

bool is_traceless(const CubicMatrix& x) {
  for (const auto& t : traces(x))
    for (const auto& e : t)
      if (!e.is_zero())
        return false;
  return true;
}

EisMatrix trace_constraints(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("cubic matrix order must be positive");
  EisMatrix m(3 * n, n * n * n);
  auto col = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      m(j, col(i, i, j)) += 1;
      m(n + j, col(i, j, i)) += 1;
      m(2 * n + j, col(j, i, i)) += 1;
    }
  return m;
}

std::size_t traceless_dimension(std::size_t n) { return n * n * n - rank(trace_constraints(n)); }

TracelessBasis traceless_basis_order2() {
  TracelessBasis b{CubicMatrix(2), CubicMatrix(2)};
  b.e1(0, 0, 0) = 1;
  b.e1(1, 1, 0) = b.e1(1, 0, 1) = b.e1(0, 1, 1) = -1;
  b.e2(1, 1, 1) = 1;
  b.e2(0, 0, 1) = b.e2(0, 1, 0) = b.e2(1, 0, 0) = -1;
  return b;
}

StructureTensor vector_structure_constants(std::size_t n, VectorVariant variant) {
  if (n == 0)
    throw std::invalid_argument("vector algebra dimension must be positive");
  StructureTensor c(n);
  const EisScalar sign = variant == VectorVariant::Cyclic ? EisScalar(1) : EisScalar(-1);
  const EisScalar w = sign * EisScalar::omega();
  const EisScalar wb = sign * EisScalar::omega_bar();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i)
          c(j, i, j, k) += sign;
        if (i == j)
          c(k, i, j, k) += w;
        if (j == k)
          c(i, i, j, k) += wb;
      }
  return c;
}

Vector flatten(const EisMatrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      v.push_back(m(r, c));
  return v;
}

Vector flatten(const CubicMatrix& x) { return x.data(); }

EisMatrix unflatten_like(const EisMatrix& shape, const Vector& v) {
  if (v.size() != shape.rows() * shape.cols())
    throw std::invalid_argument("coordinate vector has the wrong length");
  EisMatrix m(shape.rows(), shape.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      m(r, c) = v[r * m.cols() + c];
  return m;
}

CubicMatrix unflatten_like(const CubicMatrix& shape, const Vector& v) {
  if (v.size() != shape.data().size())
    throw std::invalid_argument("coordinate vector has the wrong length");
  CubicMatrix x(shape.order());
  const std::size_t n = shape.order();
  for (std::size_t i = 0; i < v.size(); ++i)
    x(i / (n * n), i / n % n, i % n) = v[i];
  return x;
}

TernaryProduct<RectMatrix> rect_transpose_product() { return {"rect-transpose", rect_triple}; }

TernaryProduct<RectMatrix> binary_derived_product() {
  return {"binary-derived", binary_derived_triple};
}

TernaryProduct<CubicMatrix> cubic_product(CubicForm form) {
  return {form == CubicForm::Beta ? "cubic-beta" : "cubic-gamma",
          [form](const CubicMatrix& x, const CubicMatrix& y, const CubicMatrix& z) {
            return cubic_triple(x, y, z, form);
          }};
}

TernaryProduct<Vector> tensor_product(StructureTensor c) {
  return {"tensor", [c = std::move(c)](const Vector& x, const Vector& y, const Vector& z) {
            return bracket(c, x, y, z);
          }};
}

namespace {

// Rows of `b` forming an invertible square block, and that block's inverse.
std::pair<std::vector<std::size_t>, EisMatrix> pivot_inverse(const EisMatrix& b) {
  const std::size_t n = b.cols();
  std::vector<std::size_t> rows;
  EisMatrix block(0, n);
  for (std::size_t r = 0; r < b.rows() && rows.size() < n; ++r) {
    EisMatrix trial(rows.size() + 1, n);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        trial(i, j) = block(i, j);
    for (std::size_t j = 0; j < n; ++j)
      trial(rows.size(), j) = b(r, j);
    if (rank(trial) == rows.size() + 1) {
      rows.push_back(r);
      block = std::move(trial);
    }
  }
  if (rows.size() != n)
    throw DependentBasis("basis elements are linearly dependent");
  return {rows, *inverse(block)};
}

} // namespace

StructureTensor extract_from_brackets(
    const EisMatrix& basis_columns,
    const std::function<Vector(std::size_t, std::size_t, std::size_t)>& bracket_of) {
  const std::size_t n = basis_columns.cols();
  const std::size_t len = basis_columns.rows();
  const auto [pivots, inv] = pivot_inverse(basis_columns);
  StructureTensor out(n);
  const auto triples = static_cast<long>(n * n * n);
  std::vector<std::exception_ptr> errors(triples);
  std::vector<char> open(triples, 0);
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < triples; ++t) {
    const std::size_t i = t / (n * n), k = t / n % n, l = t % n;
    try {
      const Vector w = bracket_of(i, k, l);
      if (w.size() != len)
        throw std::invalid_argument("bracket has the wrong length");
      // coordinates from the pivot rows, then confirm every row
      Vector x(n);
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t j = 0; j < n; ++j)
          x[m].add_product(inv(m, j), w[pivots[j]]);
      for (std::size_t r = 0; r < len && !open[t]; ++r) {
        EisScalar row;
        for (std::size_t m = 0; m < n; ++m)
          row.add_product(basis_columns(r, m), x[m]);
        open[t] = row == w[r] ? 0 : 1;
      }
      if (open[t])
        continue;
      for (std::size_t m = 0; m < n; ++m)
        out(m, i, k, l) = std::move(x[m]);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  }
  for (long t = 0; t < triples; ++t) {
    if (errors[t])
      std::rethrow_exception(errors[t]);
    if (open[t]) {
      const std::array<std::size_t, 3> triple{t / (n * n) + 1, t / n % n + 1, t % n + 1};
      std::ostringstream os;
      os << "bracket of basis elements (" << triple[0] << ", " << triple[1] << ", " << triple[2]
         << ") leaves their span";
      throw NotClosed(triple, os.str());
    }
  }
  return out;
}

std::vector<RectMatrix> matrix_unit_basis(std::size_t rows, std::size_t cols) {
  std::vector<RectMatrix> out;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      RectMatrix m(rows, cols);
      m(r, c) = 1;
      out.push_back(std::move(m));
    }
  return out;
}

std::vector<CubicMatrix> cubic_unit_basis(std::size_t n) {
  std::vector<CubicMatrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out.push_back(CubicMatrix::unit(n, i, j, k));
  return out;
}

} // namespace omegalie
