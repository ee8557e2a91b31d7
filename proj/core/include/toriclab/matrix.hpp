#pragma once

#include "toriclab/arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace toriclab {

/// Dense row-major matrix over an exact ring. Shapes with zero rows or zero
/// columns are legal; a 0 x c matrix still remembers c.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  /// Builds a matrix from row vectors; all rows must share `cols` entries.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows,
                          std::size_t cols);
  static Matrix from_columns(const std::vector<std::vector<T>>& cols,
                             std::size_t rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<T> row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }
  std::vector<T> column(std::size_t c) const;
  std::vector<std::vector<T>> row_list() const;

  void append_row(std::span<const T> r);
  void swap_rows(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T& factor);
  void negate_row(std::size_t r);
  void swap_columns(std::size_t a, std::size_t b);
  /// col[dst] += factor * col[src]
  void add_column_multiple(std::size_t dst, std::size_t src, const T& factor);
  void negate_column(std::size_t c);

  Matrix transpose() const;
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix select_columns(std::span<const std::size_t> idx) const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows,
                               std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_columns(const std::vector<std::vector<T>>& cols,
                                  std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <class T>
std::vector<T> Matrix<T>::column(std::size_t c) const {
  std::vector<T> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

template <class T>
std::vector<std::vector<T>> Matrix<T>::row_list() const {
  std::vector<std::vector<T>> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

template <class T>
void Matrix<T>::append_row(std::span<const T> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw InputError("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

template <class T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

template <class T>
void Matrix<T>::add_row_multiple(std::size_t dst, std::size_t src,
                                 const T& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    if ((*this)(src, c) != 0) (*this)(dst, c) += factor * (*this)(src, c);
  }
}

template <class T>
void Matrix<T>::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

template <class T>
void Matrix<T>::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

template <class T>
void Matrix<T>::add_column_multiple(std::size_t dst, std::size_t src,
                                    const T& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    if ((*this)(r, src) != 0) (*this)(r, dst) += factor * (*this)(r, src);
  }
}

template <class T>
void Matrix<T>::negate_column(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

template <class T>
Matrix<T> Matrix<T>::select_rows(std::span<const std::size_t> idx) const {
  Matrix m(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(idx[i], c);
  return m;
}

template <class T>
Matrix<T> Matrix<T>::select_columns(std::span<const std::size_t> idx) const {
  Matrix m(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < idx.size(); ++i) m(r, i) = (*this)(r, idx[i]);
  return m;
}

template <class T>
bool Matrix<T>::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, std::span<const T> x) {
  if (a.cols() != x.size()) throw InputError("matrix-vector shape mismatch");
  std::vector<T> out(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && x[k] != 0) out[i] += a(i, k) * x[k];
  return out;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  return a * std::span<const T>(x);
}

/// y^T A for a row vector y.
template <class T>
std::vector<T> left_multiply(std::span<const T> y, const Matrix<T>& a) {
  if (a.rows() != y.size()) throw InputError("vector-matrix shape mismatch");
  std::vector<T> out(a.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (y[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) out[j] += y[i] * a(i, j);
  }
  return out;
}

RatMatrix to_rational(const IntMatrix& m);
/// Scales every row by the lcm of its denominators (rows keep their
/// direction; they are not made primitive).
IntMatrix clear_row_denominators(const RatMatrix& m);

/// Stacks matrices vertically; all must share the column count `cols`.
template <class T>
Matrix<T> vstack(std::initializer_list<const Matrix<T>*> parts,
                 std::size_t cols) {
  Matrix<T> out(0, cols);
  for (const auto* p : parts) {
    if (p->rows() == 0) continue;
    if (p->cols() != cols) throw InputError("vstack column mismatch");
    for (std::size_t r = 0; r < p->rows(); ++r) out.append_row(p->row(r));
  }
  return out;
}

}  // namespace toriclab
