#ifndef POLYSUM_LINALG_HPP
#define POLYSUM_LINALG_HPP

#include "polysum/core.hpp"

#include <optional>

namespace polysum {

/// Exact inverse by Gauss-Jordan elimination over the rationals.
/// Returns nullopt for a singular matrix.
template <typename Derived>
std::optional<RationalMatrix> exact_inverse(const Eigen::MatrixBase<Derived>& m) {
  const Eigen::Index n = m.rows();
  RationalMatrix a = m.template cast<Rational>();
  RationalMatrix inv = RationalMatrix::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == Rational(0)) ++pivot;
    if (pivot == n) return std::nullopt;
    a.row(col).swap(a.row(pivot));
    inv.row(col).swap(inv.row(pivot));
    const Rational p = a(col, col);
    a.row(col) /= p;
    inv.row(col) /= p;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == Rational(0)) continue;
      const Rational f = a(r, col);
      a.row(r) -= f * a.row(col);
      inv.row(r) -= f * inv.row(col);
    }
  }
  return inv;
}

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
template <typename Derived>
Int exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic> a = m.template cast<Int>();
  Int sign = 1;
  Int prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// True when every entry has denominator 1.
template <typename Derived>
bool is_integral(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j).denominator() != 1) return false;
  return true;
}

}  // namespace polysum

#endif  // POLYSUM_LINALG_HPP
