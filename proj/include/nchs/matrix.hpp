#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nchs/rational.hpp"

namespace nchs {

// Dense row-major matrix. Instantiated with Rat for the exact paths and with
// double for the numeric harness. Labels, when present, name the index basis
// (one string per row/column of a square matrix) and are ignored by
// comparisons.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(check_size(rows, cols)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    for (const T& v : data_)
      if (v != T(0)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& other) {
    require_same_shape(other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
  }

  Matrix& operator-=(const Matrix& other) {
    require_same_shape(other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
  }

  Matrix& operator*=(const T& scalar) {
    for (T& v : data_) v *= scalar;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& scalar) { return a *= scalar; }
  friend Matrix operator*(const T& scalar, Matrix a) { return a *= scalar; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  std::vector<std::string> labels;

 private:
  static std::size_t check_size(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }

  void require_same_shape(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using DMatrix = Matrix<double>;

// An n-tuple of symmetric k x k matrices.
template <typename T>
struct MatTuple {
  int n = 0;
  int k = 0;
  std::vector<Matrix<T>> mats;
};

using MatTupleQ = MatTuple<Rat>;
using MatTupleD = MatTuple<double>;

template <typename T>
std::vector<T> matvec(const Matrix<T>& a, const std::vector<T>& v) {
  if (static_cast<int>(v.size()) != a.cols())
    throw std::invalid_argument("matvec: vector length mismatch");
  std::vector<T> out(static_cast<std::size_t>(a.rows()), T(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

template <typename T>
T quad_form(const Matrix<T>& a, const std::vector<T>& v) {
  std::vector<T> av = matvec(a, v);
  T out(0);
  for (std::size_t i = 0; i < v.size(); ++i) out += v[i] * av[i];
  return out;
}

// Exact elimination utilities (Rat only).

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<int> rref(RatMatrix& a);

int rank(RatMatrix a);

// Solves a * x = rhs for square nonsingular a.
RatMatrix solve(RatMatrix a, RatMatrix rhs);

RatMatrix inverse(const RatMatrix& a);

} // namespace nchs
