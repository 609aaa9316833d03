#pragma once

#include "sta/scalar.hpp"

#include <cstddef>
#include <vector>

namespace sta::linalg {

template <class K> using Matrix = std::vector<std::vector<K>>;

namespace detail {

template <Real T> double mag(const T& x) { return std::abs(to_double(x)); }
template <Real T> double mag(const Complex<T>& z) { return magnitude(z); }

template <Real T> constexpr bool exact_field(const T*) {
  return scalar_traits<T>::exact;
}
template <Real T> constexpr bool exact_field(const Complex<T>*) {
  return scalar_traits<T>::exact;
}

template <class K> bool is_zero_entry(const K& x, double threshold) {
  if constexpr (exact_field(static_cast<const K*>(nullptr))) {
    return x == K(0);
  } else {
    return mag(x) <= threshold;
  }
}

}  // namespace detail

/// In-place reduced row echelon form. Returns the pivot columns. In float
/// mode a pivot must exceed 1e-9 times the largest entry (or 1e-9 when the
/// matrix is tiny).
template <class K> std::vector<std::size_t> row_reduce(Matrix<K>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();

  double scale = 0.0;
  for (const auto& row : a)
    for (const auto& x : row) scale = std::max(scale, detail::mag(x));
  const double threshold = kFloatPivotTol * std::max(1.0, scale);

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // partial pivoting by magnitude; in exact mode any nonzero entry works
    std::size_t best = rows;
    double best_mag = -1.0;
    for (std::size_t i = r; i < rows; ++i) {
      if (detail::is_zero_entry(a[i][c], threshold)) continue;
      double m = detail::mag(a[i][c]);
      if (m > best_mag) {
        best = i;
        best_mag = m;
      }
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);
    K inv = K(1) / a[r][c];
    for (auto& x : a[r]) x = x * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || detail::is_zero_entry(a[i][c], 0.0)) continue;
      K f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K> std::size_t rank(Matrix<K> a) { return row_reduce(a).size(); }

/// Basis of {x : a x = 0}.
template <class K> std::vector<std::vector<K>> kernel(Matrix<K> a,
                                                      std::size_t cols) {
  std::vector<std::vector<K>> basis;
  if (a.empty()) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<K> v(cols, K(0));
      v[j] = K(1);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(cols, K(0));
    v[free] = K(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace sta::linalg
