#pragma once

#include <vector>

#include "heunspectra/errors.hpp"

namespace heunspectra {

// Leading principal minors R_0..R_n of a tridiagonal matrix:
//   R_k = diag[k-1] R_{k-1} - super[k-2] sub[k-2] R_{k-2},  R_0 = 1, R_{-1} = 0.
template <class T>
std::vector<T> continuant_sequence(const std::vector<T>& diag, const std::vector<T>& super,
                                   const std::vector<T>& sub) {
  const std::size_t n = diag.size();
  if (n == 0 ? !(super.empty() && sub.empty()) : (super.size() != n - 1 || sub.size() != n - 1))
    throw LengthMismatch("off-diagonals must have length diag.size() - 1");
  std::vector<T> r;
  r.reserve(n + 1);
  r.push_back(T(1));
  for (std::size_t k = 1; k <= n; ++k) {
    T next = diag[k - 1] * r[k - 1];
    if (k >= 2) next = next - super[k - 2] * sub[k - 2] * r[k - 2];
    r.push_back(next);
  }
  return r;
}

template <class T>
T continuant(const std::vector<T>& diag, const std::vector<T>& super, const std::vector<T>& sub) {
  return continuant_sequence(diag, super, sub).back();
}

// Determinant by Gaussian elimination with exact-zero pivot search; intended
// for exact fields.
template <class T>
T dense_determinant(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[col].size() != n) throw LengthMismatch("matrix must be square");
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == T(0)) ++pivot;
    if (pivot == n) return T(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == T(0)) continue;
      T factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] = m[row][k] - factor * m[col][k];
    }
  }
  return det;
}

}  // namespace heunspectra
