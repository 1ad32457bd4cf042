// Classical discrete and continuous families (Hahn, dual Hahn, Jacobi) by
// direct hypergeometric summation.  Summation instead of recurrence keeps the
// continuation to negative integer parameters exact, which is the whole point
// here; parameters may also carry first-order jets.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

#include "xopoly/discrete_measure.hpp"
#include "xopoly/jet.hpp"
#include "xopoly/poly.hpp"
#include "xopoly/rational.hpp"

namespace xop {

template <class R>
R scalar_from_integer(const Integer& z) {
  return R(Rational(z));
}

// (-x)_m = prod_{i=0}^{m-1} (i - x) as a polynomial.
template <class R>
Poly<R> falling_x(long m) {
  Poly<R> p = Poly<R>::one();
  for (long i = 0; i < m; ++i) p = p * Poly<R>(std::vector<R>{R(i), R(-1)});
  return p;
}

// Hahn polynomial h_n^{a,b,N}(x), degree <= n in x.
template <class R>
Poly<R> hahn(long n, const R& a, const R& b, const R& N) {
  if (n < 0) throw std::invalid_argument("hahn: negative degree");
  Poly<R> sum;
  Poly<R> fall = Poly<R>::one();
  for (long j = 0; j <= n; ++j) {
    if (j > 0) fall = fall * Poly<R>(std::vector<R>{R(j - 1), R(-1)});
    const R c = pochhammer(R(-n), j) * pochhammer(a + b + R(n + 1), j) *
                pochhammer(R(j) - N, n - j) * pochhammer(a + R(j + 1), n - j) /
                scalar_from_integer<R>(factorial(j));
    sum += fall * Poly<R>(c);
  }
  return sum;
}

// Dual Hahn polynomial R_n^{a,b,N}(x) in the lambda variable.
template <class R>
Poly<R> dual_hahn(long n, const R& a, const R& b, const R& N) {
  if (n < 0) throw std::invalid_argument("dual_hahn: negative degree");
  Poly<R> sum;
  Poly<R> nodes = Poly<R>::one();  // prod_{i<j} (x - i(a+b+1+i))
  for (long j = 0; j <= n; ++j) {
    if (j > 0) {
      const R i(j - 1);
      nodes = nodes * Poly<R>(std::vector<R>{-(i * (a + b + R(1) + i)), R(1)});
    }
    const R c = pochhammer(R(-n), j) * pochhammer(R(j) - N, n - j) *
                pochhammer(a + R(j + 1), n - j) * R(parity_sign(j)) /
                scalar_from_integer<R>(factorial(n) * factorial(j));
    sum += nodes * Poly<R>(c);
  }
  return sum;
}

// Jacobi polynomial P_n^{a,b}(x).
template <class R>
Poly<R> jacobi(long n, const R& a, const R& b) {
  if (n < 0) throw std::invalid_argument("jacobi: negative degree");
  const Poly<R> xm1(std::vector<R>{R(-1), R(1)});
  const Poly<R> xp1(std::vector<R>{R(1), R(1)});
  Poly<R> sum;
  for (long j = 0; j <= n; ++j) {
    const R c = binomial(a + R(n), j) * binomial(b + R(n), n - j);
    sum += Poly<R>(c) * xm1.pow(n - j) * xp1.pow(j);
  }
  return sum / scalar_from_integer<R>(Integer(1) << static_cast<unsigned>(n));
}

inline Rational lambda_value(const Rational& a, const Rational& b, const Rational& x) {
  return x * (x + a + b + 1);
}

inline QPoly lambda_poly(const Rational& a, const Rational& b) {
  return QPoly(std::vector<Rational>{0, a + b + 1, 1});
}

// Orthogonality measure of the dual Hahn family: atoms at lambda^{a,b}(x),
// x = 0..N.
inline DiscreteMeasure dual_hahn_measure(const Rational& a, const Rational& b, long N) {
  if (N < 0) throw std::invalid_argument("dual_hahn_measure: negative N");
  std::vector<DiscreteMeasure::Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(N) + 1);
  const Rational Nq(N);
  for (long x = 0; x <= N; ++x) {
    const Rational mass = Rational(factorial(N)) * Rational(parity_sign(x)) /
                          Rational(factorial(x)) * (Rational(2 * x) + a + b + 1) *
                          pochhammer(a + Rational(1), x) * pochhammer(-Nq, x) /
                          (pochhammer(Rational(x) + a + b + 1, N + 1) *
                           pochhammer(b + Rational(1), x));
    atoms.emplace_back(lambda_value(a, b, Rational(x)), mass);
  }
  return DiscreteMeasure(std::move(atoms));
}

}  // namespace xop
