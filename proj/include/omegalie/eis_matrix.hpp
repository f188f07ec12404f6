#pragma once

// Dense matrices over Q(w) and exact Gaussian elimination.

#include "omegalie/eis_scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace omegalie {

class EisMatrix {
 public:
  EisMatrix() = default;
  EisMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  EisMatrix(std::initializer_list<std::initializer_list<EisScalar>> rows);

  static EisMatrix identity(std::size_t n);
  static EisMatrix column(const std::vector<EisScalar>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  EisScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const EisScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<EisScalar> column_vector(std::size_t c) const;
  EisMatrix transpose() const;
  bool is_zero() const;

  EisMatrix& operator+=(const EisMatrix& o);
  EisMatrix& operator-=(const EisMatrix& o);
  EisMatrix& operator*=(const EisScalar& s);

  friend EisMatrix operator+(EisMatrix x, const EisMatrix& y) { return x += y; }
  friend EisMatrix operator-(EisMatrix x, const EisMatrix& y) { return x -= y; }
  friend EisMatrix operator*(EisMatrix x, const EisScalar& s) { return x *= s; }
  friend EisMatrix operator*(const EisScalar& s, EisMatrix x) { return x *= s; }
  // Throws std::invalid_argument on inner-dimension mismatch.
  friend EisMatrix operator*(const EisMatrix& x, const EisMatrix& y);

  friend bool operator==(const EisMatrix& x, const EisMatrix& y) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<EisScalar> data_;
};

struct LinearSolution {
  std::optional<EisMatrix> solution;  // nullopt: the system is inconsistent
  std::size_t rank = 0;               // rank of the coefficient matrix
};

// Solves A X = rhs exactly. Free variables are set to zero.
// Throws std::invalid_argument when A.rows() != rhs.rows().
LinearSolution solve_linear(const EisMatrix& a, const EisMatrix& rhs);

std::size_t rank(const EisMatrix& a);

// Throws std::invalid_argument for non-square input.
EisScalar determinant(const EisMatrix& a);

// nullopt for singular input.
std::optional<EisMatrix> inverse(const EisMatrix& a);

std::string to_string(const EisMatrix& m);

} // namespace omegalie
