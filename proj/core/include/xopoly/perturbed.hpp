// Perturbed Hahn / Jacobi families: the degree windows where the classical
// polynomial degenerates are filled in by parameter derivatives (computed
// with jets) or by an explicit two-term formula carrying one free parameter
// M_i per degree.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "xopoly/classical.hpp"
#include "xopoly/jet.hpp"
#include "xopoly/poly.hpp"
#include "xopoly/rational.hpp"

namespace xop {

// Free parameters M_0, M_1, ... keyed by index.
using ParamSet = std::map<long, Rational>;

inline Rational param_at(const ParamSet& M, long i) {
  const auto it = M.find(i);
  if (it == M.end())
    throw std::invalid_argument("parameter M_" + std::to_string(i) + " missing");
  return it->second;
}

inline ParamSet inverted(const ParamSet& M) {
  ParamSet out;
  for (const auto& [k, v] : M) {
    if (v == 0)
      throw std::domain_error("parameter M_" + std::to_string(k) +
                              " is zero and cannot be inverted");
    out[k] = Rational(1) / v;
  }
  return out;
}

// Degree windows (for ax <= bx <= -1): in window 1 the family member comes
// from a parameter derivative, in window 2 from the explicit M-dependent
// combination; outside both it is the classical polynomial.
inline bool in_window1(long n, long ax, long bx) {
  return ceil_div(-ax - bx, 2) <= n && n <= -ax - 1;
}
inline bool in_window2(long n, long ax, long bx) {
  return -ax <= n && n <= -ax - bx - 1;
}

// phi_u(s, x) for the Hahn side: an s-family through the degenerate degree u;
// its s-derivative at 0 (via jets) produces the window-1 members.
template <class R>
Poly<R> hahn_boundary_series(long u, long ax, long bx, const R& N, const R& s) {
  if (u < 0 || u > -ax - 1)
    throw std::invalid_argument("hahn_boundary_series: index outside [0, -ax-1]");
  const long P = std::max(u, -ax - bx - u - 1);
  const R pref = pochhammer(R(ax + 1), P) * pochhammer(-N, P);
  Poly<R> res;
  Poly<R> fall = Poly<R>::one();
  for (long k = 0; k <= u; ++k) {
    if (k > 0) fall = fall * Poly<R>(std::vector<R>{R(k - 1), R(-1)});
    const R num = pochhammer(R(-u), k) * pochhammer(R(u + ax + bx + 1) - s, k);
    const R den = pochhammer(R(ax + 1) - s, k) * pochhammer(-N, k) *
                  scalar_from_integer<R>(factorial(k));
    res += fall * Poly<R>(num / den);
  }
  return Poly<R>(pref) * res;
}

template <class R>
Poly<R> jacobi_boundary_series(long u, long ax, long bx, const R& s) {
  if (u < 0 || u > -ax - 1)
    throw std::invalid_argument("jacobi_boundary_series: index outside [0, -ax-1]");
  const long P = std::max(u, -ax - bx - u - 1);
  const R pref = pochhammer(R(ax + 1), P) / scalar_from_integer<R>(factorial(P));
  const Poly<R> half(std::vector<R>{R(1) / R(2), R(-1) / R(2)});  // (1-x)/2
  Poly<R> res;
  Poly<R> hp = Poly<R>::one();
  for (long k = 0; k <= u; ++k) {
    if (k > 0) hp = hp * half;
    const R num = pochhammer(R(-u), k) * pochhammer(R(u + ax + bx + 1) - s, k);
    const R den = pochhammer(R(ax + 1) - s, k) * scalar_from_integer<R>(factorial(k));
    res += hp * Poly<R>(num / den);
  }
  return Poly<R>(pref) * res;
}

// Perturbed Hahn member of degree n; requires ax <= bx <= -1.  M is consulted
// only for degrees in window 2.
inline QPoly perturbed_hahn(long n, long ax, long bx, const Rational& N, const ParamSet& M) {
  if (!(ax <= bx && bx <= -1))
    throw std::invalid_argument("perturbed_hahn: requires ax <= bx <= -1");
  if (n < 0) throw std::invalid_argument("perturbed_hahn: negative degree");
  if (in_window1(n, ax, bx)) {
    const QJet eps(Rational(0), Rational(1));
    const QJet Nj(N);
    const auto d1 = jet_parts(hahn_boundary_series<QJet>(n, ax, bx, Nj, eps)).second;
    const auto d2 =
        jet_parts(hahn_boundary_series<QJet>(-ax - bx - n - 1, ax, bx, Nj, eps)).second;
    return d1 - d2;
  }
  if (in_window2(n, ax, bx)) {
    const Rational Mi = param_at(M, ax + n);
    if (Mi == 1)
      throw std::domain_error("perturbed_hahn: M_" + std::to_string(ax + n) +
                              " must not equal 1");
    const QPoly t1 = Rational(factorial(-ax - bx - n - 1)) *
                     (falling_x<Rational>(-ax) *
                      hahn(ax + n, Rational(-ax), Rational(bx), Rational(ax) + N)
                          .shifted(Rational(ax)));
    const Rational c2 = Rational(factorial(n + ax)) *
                        pochhammer(-N - Rational(ax + bx + n + 1), 2 * n + ax + bx + 1) /
                        (Mi - 1);
    const QPoly t2 = c2 * hahn(-ax - bx - n - 1, Rational(ax), Rational(bx), N);
    return (Rational(parity_sign(bx + n)) * Rational(factorial(n + bx))) * (t1 + t2);
  }
  return hahn(n, Rational(ax), Rational(bx), N);
}

// Any normalization of negative parameters: the mirrored case bx < ax reduces
// to the canonical one through x -> N - x and inverted parameters.
inline QPoly perturbed_hahn_general(long n, long ax, long bx, const Rational& N,
                                    const ParamSet& M) {
  if (ax <= bx) return perturbed_hahn(n, ax, bx, N, M);
  const QPoly base = perturbed_hahn(n, bx, ax, N, inverted(M));
  const QPoly flip(std::vector<Rational>{N, -1});
  return Rational(parity_sign(n)) * base.composed(flip);
}

inline QPoly perturbed_jacobi(long n, long ax, long bx, const ParamSet& M) {
  if (!(ax <= bx && bx <= -1))
    throw std::invalid_argument("perturbed_jacobi: requires ax <= bx <= -1");
  if (n < 0) throw std::invalid_argument("perturbed_jacobi: negative degree");
  if (in_window1(n, ax, bx)) {
    const QJet eps(Rational(0), Rational(1));
    const auto d1 = jet_parts(jacobi_boundary_series<QJet>(n, ax, bx, eps)).second;
    const auto d2 =
        jet_parts(jacobi_boundary_series<QJet>(-ax - bx - n - 1, ax, bx, eps)).second;
    return d1 - d2;
  }
  if (in_window2(n, ax, bx)) {
    const Rational Mi = param_at(M, ax + n);
    if (Mi == 1)
      throw std::domain_error("perturbed_jacobi: M_" + std::to_string(ax + n) +
                              " must not equal 1");
    const QPoly t1 =
        (Rational(1) / (Mi - 1)) * jacobi(-ax - bx - n - 1, Rational(ax), Rational(bx));
    const QPoly half(std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});
    const QPoly t2 = half.pow(-ax) * jacobi(ax + n, Rational(-ax), Rational(bx));
    const Rational c = Rational(parity_sign(bx + n)) *
                       Rational(factorial(n + ax) * factorial(n + bx) *
                                factorial(-ax - bx - n - 1)) /
                       Rational(factorial(n));
    return c * (t1 + t2);
  }
  return jacobi(n, Rational(ax), Rational(bx));
}

inline QPoly perturbed_jacobi_general(long n, long ax, long bx, const ParamSet& M) {
  if (ax <= bx) return perturbed_jacobi(n, ax, bx, M);
  const QPoly base = perturbed_jacobi(n, bx, ax, inverted(M));
  const QPoly flip(std::vector<Rational>{0, -1});
  return Rational(parity_sign(n)) * base.composed(flip);
}

// Coefficient of the classical remainder term in the reflection identity for
// window-1 degrees.
inline Rational gamma_coefficient(long n, long ax, long bx, const Rational& N) {
  Rational s = 0;
  for (long j = 0; j <= 2 * n + ax + bx; ++j) s += Rational(1) / (N - Rational(n) + Rational(j + 1));
  return Rational(parity_sign(ax + bx)) * pochhammer(Rational(-n - bx), 2 * n + ax + bx + 1) *
         pochhammer(N - Rational(n) + 1, 2 * n + ax + bx + 1) * s;
}

// Leading coefficients (exact, all degree regimes).
inline Rational perturbed_hahn_leading(long n, long ax, long bx) {
  if (ceil_div(-ax - bx, 2) <= n && n <= -ax - bx - 1)
    return Rational(parity_sign(n + ax + bx)) *
           Rational(factorial(2 * n + ax + bx) * factorial(-ax - bx - n - 1));
  return pochhammer(Rational(ax + bx + n + 1), n);
}

inline Rational perturbed_jacobi_leading(long n, long ax, long bx) {
  return perturbed_hahn_leading(n, ax, bx) /
         (Rational(Integer(1) << static_cast<unsigned>(n)) * Rational(factorial(n)));
}

}  // namespace xop
