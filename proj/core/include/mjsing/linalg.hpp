#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mjsing/number_field.hpp"
#include "mjsing/upoly.hpp"

namespace mjsing {

template <class K>
using Matrix = std::vector<std::vector<K>>;

inline bool is_zero_value(const Rational& x) { return x == 0; }
inline bool is_zero_value(const Scalar& x) { return x.is_zero(); }

/// Reduced row echelon form in place; returns the pivot columns.
template <class K>
std::vector<std::size_t> row_reduce(Matrix<K>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero_value(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    K inv = K(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero_value(a[i][c])) continue;
      K f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
std::size_t rank(Matrix<K> a) {
  return row_reduce(a).size();
}

/// Basis of the right kernel {v : a v = 0}; `cols` is needed when a has
/// no rows.
template <class K>
std::vector<std::vector<K>> kernel(Matrix<K> a, std::size_t cols) {
  auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(cols, K(0));
    v[free] = K(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rank over Q by Bareiss fraction-free elimination on the row-scaled
/// integer matrix.
std::size_t rank_fraction_free(const Matrix<Rational>& a);

/// Determinant of a square rational matrix.
Rational determinant(Matrix<Rational> a);

}  // namespace mjsing
