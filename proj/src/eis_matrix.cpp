#include "omegalie/eis_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace omegalie {

EisMatrix::EisMatrix(std::initializer_list<std::initializer_list<EisScalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_)
      throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

EisMatrix EisMatrix::identity(std::size_t n) {
  EisMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

EisMatrix EisMatrix::column(const std::vector<EisScalar>& v) {
  EisMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    m(i, 0) = v[i];
  return m;
}

std::vector<EisScalar> EisMatrix::column_vector(std::size_t c) const {
  std::vector<EisScalar> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

EisMatrix EisMatrix::transpose() const {
  EisMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool EisMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero())
      return false;
  return true;
}

EisMatrix& EisMatrix::operator+=(const EisMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in addition");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] += o.data_[i];
  return *this;
}

EisMatrix& EisMatrix::operator-=(const EisMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] -= o.data_[i];
  return *this;
}

EisMatrix& EisMatrix::operator*=(const EisScalar& s) {
  for (auto& x : data_)
    x *= s;
  return *this;
}

EisMatrix operator*(const EisMatrix& x, const EisMatrix& y) {
  if (x.cols_ != y.rows_)
    throw std::invalid_argument("matrix shape mismatch in product");
  EisMatrix p(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const EisScalar& xik = x(i, k);
      if (xik.is_zero())
        continue;
      for (std::size_t j = 0; j < y.cols_; ++j)
        p(i, j).add_product(xik, y(k, j));
    }
  return p;
}

namespace {

struct Echelon {
  EisMatrix augmented;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form of [a | rhs]; pivots are searched only among the
// first `coeff_cols` columns.
Echelon reduce(EisMatrix m, std::size_t coeff_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < coeff_cols && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero())
      ++pivot;
    if (pivot == m.rows())
      continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(pivot, c), m(row, c));
    EisScalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c)
      m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero())
        continue;
      EisScalar f = -m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c).add_product(f, m(row, c));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

} // namespace

LinearSolution solve_linear(const EisMatrix& a, const EisMatrix& rhs) {
  if (a.rows() != rhs.rows())
    throw std::invalid_argument("solve_linear: row count mismatch between A and rhs");
  EisMatrix aug(a.rows(), a.cols() + rhs.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < rhs.cols(); ++c)
      aug(r, a.cols() + c) = rhs(r, c);
  }
  Echelon e = reduce(std::move(aug), a.cols());
  const std::size_t rk = e.pivot_cols.size();
  LinearSolution out;
  out.rank = rk;
  for (std::size_t r = rk; r < a.rows(); ++r)
    for (std::size_t c = 0; c < rhs.cols(); ++c)
      if (!e.augmented(r, a.cols() + c).is_zero())
        return out;
  EisMatrix x(a.cols(), rhs.cols());
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t c = 0; c < rhs.cols(); ++c)
      x(e.pivot_cols[i], c) = e.augmented(i, a.cols() + c);
  out.solution = std::move(x);
  return out;
}

std::size_t rank(const EisMatrix& a) { return reduce(a, a.cols()).pivot_cols.size(); }

EisScalar determinant(const EisMatrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("determinant of a non-square matrix");
  EisMatrix m = a;
  const std::size_t n = m.rows();
  EisScalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero())
      ++pivot;
    if (pivot == n)
      return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c)
        std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    EisScalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero())
        continue;
      EisScalar f = -(m(r, col) * inv);
      for (std::size_t c = col; c < n; ++c)
        m(r, c).add_product(f, m(col, c));
    }
  }
  return det;
}

std::optional<EisMatrix> inverse(const EisMatrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("inverse of a non-square matrix");
  LinearSolution s = solve_linear(a, EisMatrix::identity(a.rows()));
  if (s.rank < a.rows())
    return std::nullopt;
  return s.solution;
}

std::string to_string(const EisMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c)
      os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

} // namespace omegalie
