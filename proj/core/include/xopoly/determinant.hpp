// Exact determinants for the small matrices behind the determinantal family
// constructions: naive cofactor expansion as the reference, and fraction-free
// Bareiss elimination for polynomial entries.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "xopoly/poly.hpp"
#include "xopoly/rational.hpp"

namespace xop {

template <class R>
using Matrix = std::vector<std::vector<R>>;

template <class R>
void require_square(const Matrix<R>& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("matrix not square");
}

// Cofactor expansion along the first row; the empty matrix has determinant 1.
// Exponential cost, intended for cross-checking and sizes <= 6.
template <class R>
R det_cofactor(const Matrix<R>& m) {
  require_square(m);
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  R acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<R> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<R> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const R t = m[0][j] * det_cofactor(minor);
    acc = (j % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

// Fraction-free Bareiss elimination with row pivoting; every interior
// division is exact.  Polynomial-entry determinants use this path.
inline QPoly det_poly(Matrix<QPoly> m) {
  require_square(m);
  const std::size_t n = m.size();
  if (n == 0) return QPoly::one();
  int sgn = 1;
  QPoly prev = QPoly::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return QPoly::zero();
      std::swap(m[k], m[r]);
      sgn = -sgn;
    }
    const bool trivial_prev = (prev == QPoly::one());
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        QPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = trivial_prev ? std::move(t) : divide_exact(t, prev);
      }
    prev = m[k][k];
  }
  return sgn < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// prod_{i<j} (x_j - x_i); repeated nodes are rejected rather than returning 0.
inline Rational vandermonde(const std::vector<Rational>& xs) {
  Rational r = 1;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) throw std::invalid_argument("vandermonde: repeated node");
      r *= xs[j] - xs[i];
    }
  return r;
}

}  // namespace xop
