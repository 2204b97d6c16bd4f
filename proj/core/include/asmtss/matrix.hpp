#pragma once

#include "asmtss/ring.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace asmtss {

/// Dense n x n matrix, row-major.
template <Ring R>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, R(0)) {}

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  static SquareMatrix from_rows(const std::vector<std::vector<R>>& rows) {
    SquareMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw std::invalid_argument("SquareMatrix: rows are not square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t size() const { return n_; }
  R& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t n_ = 0;
  std::vector<R> data_;
};

namespace detail {

template <Field F>
F determinant_by_elimination(SquareMatrix<F> m) {
  const std::size_t n = m.size();
  F det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return F(0);
    if (pivot != col) {
      m.swap_rows(pivot, col);
      det = -det;
    }
    det = det * m(col, col);
    const F inv = F(1) / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const F factor = m(r, col) * inv;
      for (std::size_t c = col + 1; c < n; ++c) m(r, c) = m(r, c) - factor * m(col, c);
    }
  }
  return det;
}

// Bareiss fraction-free elimination; every division is exact.
template <Ring R>
R determinant_bareiss(SquareMatrix<R> m) {
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  R previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return R(0);
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R value = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = previous == R(1) ? std::move(value) : value.exact_divide(previous);
      }
    }
    previous = m(k, k);
  }
  R det = m(n - 1, n - 1);
  return negate ? R(-det) : det;
}

}  // namespace detail

/// Exact determinant: Gaussian elimination over a field, Bareiss
/// fraction-free elimination over any other ring (which must provide
/// exact_divide).
template <Ring R>
R determinant(const SquareMatrix<R>& m) {
  if constexpr (is_field_v<R>) {
    return detail::determinant_by_elimination(m);
  } else {
    return detail::determinant_bareiss(m);
  }
}

}  // namespace asmtss
