#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orbitkit/rational.hpp"

namespace orbitkit {

/// Dense row-major matrix over an exact ring (Rational or Integer).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const noexcept { return data_; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
  }
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const Matrix& a, const Matrix& b) { return a.data_ < b.data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v) {
  std::vector<T> out(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

/// Matrix whose columns are the given vectors (all of length `dim`).
RationalMatrix from_columns(const std::vector<Vec>& columns, std::size_t dim);
RationalMatrix from_rows(const std::vector<Vec>& rows, std::size_t dim);

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
RationalMatrix rref(RationalMatrix a, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const RationalMatrix& a);

/// Some x with a*x == b, or nullopt if the system is inconsistent. Free
/// variables are set to zero, so the answer is unique when a has full column rank.
std::optional<Vec> solve(const RationalMatrix& a, const Vec& b);

/// Basis of {x : a*x == 0}, one vector per free column of the RREF.
std::vector<Vec> nullspace(const RationalMatrix& a);

IntMatrix to_integer(const RationalMatrix& a);  // throws InputError on non-integral entries

/// Smith decomposition P * A * Q == D with P, Q unimodular and D diagonal,
/// diagonal entries positive and each dividing the next.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;   // P
  IntMatrix right;  // Q
  std::vector<Integer> invariants;  // nonzero diagonal entries, in order
  std::size_t rank() const noexcept { return invariants.size(); }
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Integer coefficients c with sum_i c_i * generators[i] == v, if any exist.
/// Generators may be rational and linearly dependent.
std::optional<std::vector<Integer>> integer_combination(const std::vector<Vec>& generators, const Vec& v);

}  // namespace orbitkit
