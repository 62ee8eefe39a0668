#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"

namespace hyperbranch {

/// Dense row-major matrix over an exact ring.
template<typename T>
class Matrix
{
public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
  : rows_(rows), cols_(cols), data_(rows * cols, fill)
  {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows)
  : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
  {
    data_.reserve(rows_ * cols_);
    for (auto const& row : rows) {
      if (row.size() != cols_)
        throw DomainError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n)
  {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  T const& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<T const> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> const& data() const { return data_; }

  Matrix transpose() const
  {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        t(c, r) = (*this)(r, c);
    return t;
  }

  /// Column subset/reordering: result column k is this matrix's column picks[k].
  Matrix select_columns(std::span<std::size_t const> picks) const
  {
    Matrix m(rows_, picks.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < picks.size(); ++k)
        m(r, k) = (*this)(r, picks[k]);
    return m;
  }

  friend bool operator==(Matrix const& a, Matrix const& b)
  {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(Matrix const& a, Matrix const& b)
  {
    if (a.cols_ != b.rows_)
      throw DomainError("matrix product dimension mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0)
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          m(i, j) += a(i, k) * b(k, j);
      }
    return m;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

template<typename T>
bool is_lower_unitriangular(Matrix<T> const& m)
{
  if (!m.square())
    return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 1)
      return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != 0)
        return false;
  }
  return true;
}

inline RationalMatrix to_rational(IntMatrix const& m)
{
  RationalMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      q(i, j) = Rational(m(i, j));
  return q;
}

/// Fraction-free (Bareiss) determinant; independent of any triangular
/// structure the caller may expect.
inline Integer determinant(IntMatrix m)
{
  if (!m.square())
    throw DomainError("determinant of non-square matrix");
  std::size_t const n = m.rows();
  if (n == 0)
    return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Solves X·A = B exactly for X (A square and invertible).
inline RationalMatrix solve_right(IntMatrix const& a, IntMatrix const& b)
{
  if (!a.square() || a.cols() != b.cols())
    throw DomainError("solve_right dimension mismatch");
  // X·A = B  <=>  Aᵀ·Xᵀ = Bᵀ; eliminate on the augmented [Aᵀ | Bᵀ].
  std::size_t const n = a.rows();
  std::size_t const m = b.rows();
  RationalMatrix aug(n, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = Rational(a(j, i));
    for (std::size_t j = 0; j < m; ++j)
      aug(i, n + j) = Rational(b(j, i));
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug(p, c) == 0)
      ++p;
    if (p == n)
      throw ComputationError("singular system in solve_right");
    if (p != c)
      for (std::size_t j = 0; j < n + m; ++j)
        std::swap(aug(c, j), aug(p, j));
    Rational const pivot = aug(c, c);
    for (std::size_t j = c; j < n + m; ++j)
      aug(c, j) /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug(r, c) == 0)
        continue;
      Rational const f = aug(r, c);
      for (std::size_t j = c; j < n + m; ++j)
        aug(r, j) -= f * aug(c, j);
    }
  }
  RationalMatrix x(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      x(i, j) = aug(j, n + i);
  return x;
}

} // namespace hyperbranch
