// Exceptional Jacobi family: Wronskian-determinant construction from
// perturbed Jacobi rows, the second-order differential operator, root
// location of Omega, weights, norms, and the lattice-to-interval limit that
// connects the discrete family to this one.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "xopoly/determinant.hpp"
#include "xopoly/family_spec.hpp"
#include "xopoly/perturbed.hpp"
#include "xopoly/poly.hpp"
#include "xopoly/quadrature.hpp"
#include "xopoly/rational.hpp"
#include "xopoly/sturm.hpp"

namespace xop {

namespace detail {
inline Matrix<QPoly> jacobi_wronskian_matrix(const std::vector<long>& degrees, long cols,
                                             long ax, long bx, const ParamSet& M) {
  Matrix<QPoly> mat;
  mat.reserve(degrees.size());
  for (long d : degrees) {
    std::vector<QPoly> row;
    row.reserve(static_cast<std::size_t>(cols));
    row.push_back(perturbed_jacobi(d, ax, bx, M));
    for (long j = 1; j < cols; ++j) row.push_back(row.back().derivative());
    mat.push_back(std::move(row));
  }
  return mat;
}
}  // namespace detail

inline QPoly xjacobi(long n, const FamilySpec& spec) {
  validate_spec(spec);
  const long uF = u_F(spec.F);
  const long v = n - uF;
  if (v < 0) throw std::invalid_argument("xjacobi: degree below u_F");
  for (long f : spec.F)
    if (f == v) throw std::invalid_argument("xjacobi: degree not in sigma_F");
  std::vector<long> degrees{v};
  degrees.insert(degrees.end(), spec.F.begin(), spec.F.end());
  const long cols = static_cast<long>(spec.F.size()) + 1;
  return det_poly(detail::jacobi_wronskian_matrix(degrees, cols, spec.ax, spec.bx, spec.M));
}

inline QPoly omega_jacobi(const FamilySpec& spec) {
  validate_spec(spec);
  const long cols = static_cast<long>(spec.F.size());
  return det_poly(detail::jacobi_wronskian_matrix(spec.F, cols, spec.ax, spec.bx, spec.M));
}

// (1-x^2) Omega P'' + (h1 Omega - 2(1-x^2) Omega') P'
//   + (-lambda(nF) Omega + h0 Omega' + (1-x^2) Omega'') P + lambda(n-u_F) Omega P;
// identically zero iff P_n solves the eigenvalue equation.
inline QPoly jacobi_eigen_residual(const FamilySpec& spec, const QPoly& omega, long n,
                                   const QPoly& p) {
  const long nF = static_cast<long>(spec.F.size());
  const long uF = u_F(spec.F);
  const Rational ax(spec.ax), bx(spec.bx);
  const QPoly one_x2(std::vector<Rational>{1, 0, -1});
  const QPoly h1a(std::vector<Rational>{bx - ax, -(ax + bx + Rational(2 * nF + 2))});
  const QPoly h0a(std::vector<Rational>{ax - bx, Rational(2 * nF) + ax + bx});
  const Rational lamF = lambda_value(ax, bx, Rational(nF));
  const Rational ev = lambda_value(ax, bx, Rational(n - uF));
  const QPoly omp = omega.derivative(), ompp = omp.derivative();
  const QPoly pp = p.derivative(), ppp = pp.derivative();
  QPoly lhs = one_x2 * omega * ppp;
  lhs += (h1a * omega - Rational(2) * (one_x2 * omp)) * pp;
  lhs += ((-lamF) * omega + h0a * omp + one_x2 * ompp) * p;
  lhs += ev * (omega * p);
  return lhs;
}

// Exact: does Omega keep a fixed sign on [-1, 1]?  (Sturm count, endpoints
// included.)
inline bool omega_rootfree(const FamilySpec& spec) {
  require_verifiable(spec);
  const QPoly om = omega_jacobi(spec);
  if (om.is_zero()) return false;
  return sturm_roots_in_interval(om, Rational(-1), Rational(1)) == 0;
}

// Squared L^2 norm of P_n against (1-x)^{ax+nF} (1+x)^{bx+nF} / Omega^2
// (closed form; defined for admissible rootfree specs).
inline Rational xjacobi_norm(long n, const FamilySpec& spec) {
  require_verifiable(spec);
  const long ax = spec.ax, bx = spec.bx;
  const long uF = u_F(spec.F);
  const long v = n - uF;
  Rational rho = 1;
  if (0 <= v && v <= -bx - 1) {
    const Rational Mi = param_at(spec.M, -bx - 1 - v);
    if (Mi == 0) throw std::domain_error("xjacobi_norm: M parameter must be nonzero");
    rho = -rational_pow(Rational(1) - Mi, 2) / Mi;
  }
  Rational r = rational_pow(Rational(2), ax + bx + 1) * rho;
  for (long f : spec.F) r *= Rational(v - f);
  const auto [um, up] = uf_sets(ax, bx, spec.F);
  for (const auto& uset : {um, up})
    for (long u : uset) r *= Rational(v + u + 1);
  for (long i = 1; i <= -ax; ++i) r *= Rational(v + ax + bx + i);
  return r / Rational(2 * v + ax + bx + 1);
}

// Numeric inner product <P_n, P_m> under the Omega-corrected Jacobi weight.
inline Real xjacobi_quadrature_inner(const FamilySpec& spec, const QPoly& omega,
                                     const QPoly& pn, const QPoly& pm, int nodes) {
  require_verifiable(spec);
  const long nF = static_cast<long>(spec.F.size());
  const int ea = static_cast<int>(spec.ax + nF);
  const int eb = static_cast<int>(spec.bx + nF);
  return integrate(
      [&](const Real& x) {
        Real w = 1;
        for (int i = 0; i < ea; ++i) w *= (1 - x);
        for (int i = 0; i < eb; ++i) w *= (1 + x);
        const Real om = eval_real(omega, x);
        return eval_real(pn, x) * eval_real(pm, x) * w / (om * om);
      },
      nodes);
}

// Constants of the lattice limit: H_n^{(N)}((1-x)N/2) / N^n -> upsilon_n P_n(x)
// and Omega_N((1-x)N/2) / N^{u_F+n_F} -> upsilon_F Omega(x).
inline Rational limit_member_constant(long n, const FamilySpec& spec) {
  const long uF = u_F(spec.F);
  const long nF = static_cast<long>(spec.F.size());
  Rational r = Rational(parity_sign(n)) *
               Rational(Integer(1) << static_cast<unsigned>(nF * (nF + 1) / 2)) *
               Rational(factorial(n - uF));
  for (long f : spec.F) r *= Rational(factorial(f));
  return r;
}

inline Rational limit_omega_constant(const FamilySpec& spec) {
  const long uF = u_F(spec.F);
  const long nF = static_cast<long>(spec.F.size());
  Rational r = Rational(parity_sign(uF + nF)) *
               Rational(Integer(1) << static_cast<unsigned>(nF * (nF - 1) / 2));
  for (long f : spec.F) r *= Rational(factorial(f));
  return r;
}

}  // namespace xop
