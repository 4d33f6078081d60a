#pragma once

#include <utility>
#include <vector>

#include "kellerscope/errors.hpp"

namespace kellerscope {

// Fraction-free determinant (Bareiss). Works over any integral domain whose
// exact_div(a, b) is provided; every division performed is exact.
template <class D, class ExactDiv, class IsZero>
D bareiss_det(std::vector<std::vector<D>> m, ExactDiv exact_div, IsZero is_zero) {
  const std::size_t n = m.size();
  if (n == 0) return D(1);
  for (const auto& row : m) ensure(row.size() == n, "bareiss: non-square matrix");
  int sign = 1;
  D prev = D(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t r = k + 1;
      while (r < n && is_zero(m[r][k])) ++r;
      if (r == n) return D(0);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        D t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_div(std::move(t), prev);
      }
      m[i][k] = D(0);
    }
    prev = m[k][k];
  }
  D det = m[n - 1][n - 1];
  return sign < 0 ? D(0) - det : det;
}

}  // namespace kellerscope
