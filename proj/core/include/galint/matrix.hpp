#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "galint/error.hpp"
#include "galint/upoly.hpp"

namespace galint {

/// Dense row-major matrix over an exact field (GaussRat, RatFn) or ring
/// (MPoly, MRatFn).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n, T(0));
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  T& at(size_t i, size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return (*this)(i, j);
  }
  const T& at(size_t i, size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return (*this)(i, j);
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix c = a;
    for (size_t k = 0; k < c.a_.size(); ++k) c.a_[k] = c.a_[k] + b.a_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix c = a;
    for (size_t k = 0; k < c.a_.size(); ++k) c.a_[k] = c.a_[k] - b.a_[k];
    return c;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix dimension mismatch in product");
    Matrix c(a.rows_, b.cols_, T(0));
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + a(i, k) * b(k, j);
      }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  template <typename F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  Matrix submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
    Matrix out(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j) out(i, j) = at(rows[i], cols[j]);
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix dimension mismatch");
  }

  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<T> a_;
};

/// Row-echelon reduction in place over a field; returns the pivot columns.
template <typename T>
std::vector<size_t> row_reduce(Matrix<T>& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    T inv = T(1) / m(row, col);
    for (size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      T f = m(i, col);
      for (size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename T>
size_t rank(Matrix<T> m) {
  return row_reduce(m).size();
}

/// Basis of the right null space {v : m v = 0}.
template <typename T>
std::vector<std::vector<T>> null_space(Matrix<T> m) {
  std::vector<size_t> pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = T(0) - m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  if (!m.square()) throw InputError("inverse of a non-square matrix");
  size_t n = m.rows();
  Matrix<T> aug(n, 2 * n, T(0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  std::vector<size_t> pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

template <typename T>
T determinant(Matrix<T> m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  T det(1);
  size_t n = m.rows();
  for (size_t col = 0; col < n; ++col) {
    size_t p = col;
    while (p < n && m(p, col).is_zero()) ++p;
    if (p == n) return T(0);
    if (p != col) {
      for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = T(0) - det;
    }
    det = det * m(col, col);
    T inv = T(1) / m(col, col);
    for (size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      T f = m(i, col) * inv;
      for (size_t j = col; j < n; ++j) m(i, j) = m(i, j) - f * m(col, j);
    }
  }
  return det;
}

/// det(lambda*I - m) by Faddeev-LeVerrier.
inline UPoly charpoly(const Matrix<GaussRat>& m) {
  if (!m.square()) throw InputError("characteristic polynomial of a non-square matrix");
  size_t n = m.rows();
  std::vector<GaussRat> c(n + 1);
  c[n] = GaussRat(1);
  Matrix<GaussRat> mk(n, n, GaussRat(0));
  Matrix<GaussRat> id = Matrix<GaussRat>::identity(n);
  for (size_t k = 1; k <= n; ++k) {
    Matrix<GaussRat> shifted = mk;
    for (size_t i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
    mk = m * shifted;
    GaussRat tr;
    for (size_t i = 0; i < n; ++i) tr += mk(i, i);
    c[n - k] = -tr / GaussRat(static_cast<long>(k));
  }
  return UPoly(std::move(c));
}

}  // namespace galint
