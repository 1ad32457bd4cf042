// Exceptional Hahn family: determinantal construction from perturbed Hahn
// rows, the second-order difference operator it diagonalizes, admissibility,
// the discrete orthogonality measure, norms, and the duality with the Krall
// dual Hahn family.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "xopoly/determinant.hpp"
#include "xopoly/discrete_measure.hpp"
#include "xopoly/family_spec.hpp"
#include "xopoly/krall.hpp"
#include "xopoly/perturbed.hpp"
#include "xopoly/poly.hpp"
#include "xopoly/rational.hpp"
#include "xopoly/rational_function.hpp"

namespace xop {

namespace detail {
inline Matrix<QPoly> hahn_det_matrix(const std::vector<long>& degrees, long cols, long ax,
                                     long bx, const Rational& N, const ParamSet& M) {
  Matrix<QPoly> mat;
  mat.reserve(degrees.size());
  for (long d : degrees) {
    const QPoly base = perturbed_hahn(d, ax, bx, N, M);
    std::vector<QPoly> row;
    row.reserve(static_cast<std::size_t>(cols));
    for (long j = 0; j < cols; ++j) row.push_back(base.shifted(Rational(j)));
    mat.push_back(std::move(row));
  }
  return mat;
}
}  // namespace detail

// Degree-n member h_n (n in sigma_F): determinant of shifted perturbed rows.
inline QPoly xhahn(long n, const FamilySpec& spec) {
  validate_spec(spec);
  const Rational N(hahn_N(spec));
  const long uF = u_F(spec.F);
  const long v = n - uF;
  if (v < 0) throw std::invalid_argument("xhahn: degree below u_F");
  for (long f : spec.F)
    if (f == v) throw std::invalid_argument("xhahn: degree not in sigma_F");
  std::vector<long> degrees{v};
  degrees.insert(degrees.end(), spec.F.begin(), spec.F.end());
  const long cols = static_cast<long>(spec.F.size()) + 1;
  return det_poly(detail::hahn_det_matrix(degrees, cols, spec.ax, spec.bx, N, spec.M));
}

// Omega: the same determinant over the F rows only.
inline QPoly omega_hahn(const FamilySpec& spec) {
  validate_spec(spec);
  const Rational N(hahn_N(spec));
  const long cols = static_cast<long>(spec.F.size());
  return det_poly(detail::hahn_det_matrix(spec.F, cols, spec.ax, spec.bx, N, spec.M));
}

// Lambda: F rows, shift columns 0..n_F except n_F - 1.
inline QPoly lambda_hahn(const FamilySpec& spec) {
  validate_spec(spec);
  const Rational N(hahn_N(spec));
  const long nF = static_cast<long>(spec.F.size());
  Matrix<QPoly> mat;
  for (long f : spec.F) {
    const QPoly base = perturbed_hahn(f, spec.ax, spec.bx, N, spec.M);
    std::vector<QPoly> row;
    for (long j = 0; j <= nF; ++j) {
      if (j == nF - 1) continue;
      row.push_back(base.shifted(Rational(j)));
    }
    mat.push_back(std::move(row));
  }
  return det_poly(mat);
}

// Second-order difference operator coefficients, cleared of denominators.
// The eigenvalue equation D h_n = lambda(n - u_F) h_n, multiplied through by
// Omega(x) Omega(x+1), becomes a polynomial identity.
struct HahnOperator {
  QPoly A, B, C0;   // coefficient polynomials of the cleared form
  QPoly G, G1;      // (x+ax+nF)(x-N-1+nF) Lambda(x) and its unit shift
  QPoly Om, Om1;    // Omega(x), Omega(x+1)
  long nF = 0;
};

inline HahnOperator hahn_operator(const FamilySpec& spec) {
  const long nF = static_cast<long>(spec.F.size());
  const long N = hahn_N(spec);
  const auto lin = [](const Rational& c) {
    return QPoly(std::vector<Rational>{c, 1});
  };
  HahnOperator op;
  op.nF = nF;
  op.A = QPoly::x() * lin(Rational(-spec.bx - N - 1));
  op.B = lin(Rational(spec.ax + nF + 1)) * lin(Rational(-N + nF));
  op.C0 = -(lin(Rational(nF)) * lin(Rational(-spec.bx - N - 1 + nF))) -
          (lin(Rational(spec.ax + 1 + nF)) * lin(Rational(-N + nF)));
  op.Om = omega_hahn(spec);
  op.Om1 = op.Om.shifted(1);
  op.G = lin(Rational(spec.ax + nF)) * lin(Rational(-N - 1 + nF)) * lambda_hahn(spec);
  op.G1 = op.G.shifted(1);
  return op;
}

// Omega(x)Omega(x+1) (D h - lambda(n-u_F) h); identically zero iff h_n is an
// eigenfunction.
inline QPoly hahn_eigen_residual(const HahnOperator& op, const QPoly& h, const Rational& eigenvalue) {
  const QPoly hm = h.shifted(-1), hp = h.shifted(1);
  QPoly lhs = op.A * op.Om1 * op.Om1 * hm;
  lhs += (op.C0 * op.Om * op.Om1 + op.G1 * op.Om - op.G * op.Om1) * h;
  lhs += op.B * op.Om * op.Om * hp;
  lhs -= eigenvalue * (op.Om * op.Om1 * h);
  return lhs;
}

// The operator in its printed rational-function form (for reporting).
inline std::vector<RationalFunction> hahn_operator_coefficients(const HahnOperator& op) {
  return {RationalFunction(op.A * op.Om1, op.Om),                                    // shift -1
          RationalFunction(op.C0 * op.Om * op.Om1 + op.G1 * op.Om - op.G * op.Om1,
                           op.Om * op.Om1),                                          // shift 0
          RationalFunction(op.B * op.Om, op.Om1)};                                   // shift +1
}

// Admissibility by the sign conditions on M and the index set.
inline bool admissible(const FamilySpec& spec) {
  validate_spec(spec);
  require_verifiable(spec);
  const long ax = spec.ax, bx = spec.bx;
  const std::set<long> fs(spec.F.begin(), spec.F.end());
  std::vector<long> fext;
  for (long f : spec.F)
    if (!(-bx <= f && f <= -ax - bx - 1)) fext.push_back(f);
  for (long i = 0; i < -bx; ++i) {
    if (fs.count(-bx - i - 1)) continue;
    Rational prod = 1;
    for (long f : fext) prod *= Rational(i - f - ax) * Rational(i + f + bx + 1);
    if (prod == 0) return false;
    if ((param_at(spec.M, i) > 0) != (prod > 0)) return false;
  }
  long top = -1;
  for (long f : spec.F) top = std::max(top, f + ax + bx);
  for (long x = 0; x <= top; ++x) {
    Rational prod = 1;
    for (long f : spec.F)
      if (f >= -ax - bx) prod *= Rational(x - f - ax - bx);
    if (prod < 0) return false;
  }
  return true;
}

// Admissibility via the sign of Omega(x)Omega(x+1) on the lattice.
inline bool admissible_via_omega(const FamilySpec& spec) {
  require_verifiable(spec);
  const long N = hahn_N(spec);
  const long nF = static_cast<long>(spec.F.size());
  const QPoly om = omega_hahn(spec);
  for (long x = 0; x <= N - nF; ++x)
    if (om(Rational(x)) * om(Rational(x + 1)) <= 0) return false;
  return true;
}

// Admissibility via positivity of the dual measure.
inline bool admissible_via_measure(const FamilySpec& spec) {
  require_verifiable(spec);
  const long N = hahn_N(spec);
  const long a = -spec.ax, b = -spec.bx;
  const long NN = N + spec.ax + spec.bx;
  const auto [um, up] = uf_sets(spec.ax, spec.bx, spec.F);
  return krall_measure(a, b, NN, spec.M, um, up).all_positive();
}

// Orthogonality measure on the lattice x = 0..N-nF with the Omega-corrected
// weight.
inline DiscreteMeasure orthogonality_measure(const FamilySpec& spec) {
  require_verifiable(spec);
  const long N = hahn_N(spec);
  const long nF = static_cast<long>(spec.F.size());
  const QPoly om = omega_hahn(spec);
  std::vector<DiscreteMeasure::Atom> atoms;
  for (long x = 0; x <= N - nF; ++x) {
    const Rational denom = om(Rational(x)) * om(Rational(x + 1));
    if (denom == 0)
      throw std::domain_error("orthogonality_measure: Omega vanishes on the lattice");
    const Rational mass = binomial(Rational(spec.ax + nF + x), x) *
                          binomial(Rational(spec.bx + N - x), N - nF - x) / denom;
    atoms.emplace_back(Rational(x), mass);
  }
  return DiscreteMeasure(std::move(atoms));
}

// Duality normalization factors.
struct DualityFactors {
  std::function<Rational(long)> xi;
  Rational kappa;
  std::function<Rational(long)> tau;
  std::function<Rational(long)> theta;
};

inline DualityFactors duality_factors(const FamilySpec& spec) {
  const long ax = spec.ax, bx = spec.bx;
  const long N = hahn_N(spec);
  const long nF = static_cast<long>(spec.F.size());
  const auto [um, up] = uf_sets(ax, bx, spec.F);
  std::vector<long> uf = um;
  uf.insert(uf.end(), up.begin(), up.end());

  DualityFactors d;
  d.xi = [=](long n) {
    Rational r = rational_pow(pochhammer_ext(Rational(N - n + 1), n + ax + bx), ax + nF + 1);
    for (long j = 1; j <= nF + 1; ++j) r *= pochhammer(Rational(N - n - j + 2), j - 1);
    return r;
  };
  d.kappa = 1;
  for (long u : um) d.kappa *= Rational(1) - param_at(spec.M, -u + ax - 1);
  for (long u : uf) d.kappa *= zeta_factor(u, ax, bx, Rational(N));
  const Rational aq(-ax), bq(-bx);
  d.tau = [=](long v) {
    Rational r = 1;
    for (long u : uf)
      r *= lambda_value(aq, bq, Rational(v + ax + bx)) - lambda_value(aq, bq, Rational(u));
    return r;
  };
  const ParamSet M = spec.M;
  d.theta = [=](long v) {
    if (0 <= v && v <= -bx - 1) return Rational(1) - param_at(M, -bx - 1 - v);
    return Rational(1);
  };
  return d;
}

// Squared norm of h_n under the orthogonality measure (closed form).
inline Rational xhahn_norm(long n, const FamilySpec& spec) {
  require_verifiable(spec);
  const long ax = spec.ax, bx = spec.bx;
  const long N = hahn_N(spec);
  const long uF = u_F(spec.F);
  const long v = n - uF;
  const auto [um, up] = uf_sets(ax, bx, spec.F);
  const long nU = static_cast<long>(um.size() + up.size());
  const auto d = duality_factors(spec);
  const DiscreteMeasure nu_plain =
      krall_measure_base(-ax, -bx, N + ax + bx, spec.M);
  Rational num = d.tau(v) * rational_pow(zeta_factor(v + ax + bx, ax, bx, Rational(N)), 2) *
                 rational_pow(d.theta(v), 2);
  for (long j = 1; j <= -bx; ++j) num *= rational_pow(Rational(N + ax + bx + j), 2);
  const Rational den =
      Rational(factorial(nU) * factorial(-ax + bx + nU)) *
      nu_plain.mass_at(lambda_value(Rational(-ax), Rational(-bx), Rational(v + ax + bx)));
  return num / den;
}

// The duality identity tying evaluations of h on the lattice to evaluations
// of the Krall dual Hahn family at the mapped spectral points.
inline bool verify_lemma32(const FamilySpec& spec, long n_max, long v_max) {
  require_verifiable(spec);
  const long ax = spec.ax, bx = spec.bx;
  const long N = hahn_N(spec);
  const long a = -ax, b = -bx;
  const Rational NN(N + ax + bx);
  const long uF = u_F(spec.F);
  const auto [um, up] = uf_sets(ax, bx, spec.F);
  const auto d = duality_factors(spec);
  const std::set<long> fs(spec.F.begin(), spec.F.end());
  for (long n = 0; n <= n_max; ++n) {
    const QPoly qn = krall_dual_hahn(n, a, b, NN, spec.M, um, up);
    for (long v = 0; v <= v_max; ++v) {
      if (fs.count(v)) continue;
      const Rational lhs = d.xi(n) * xhahn(v + uF, spec)(Rational(n));
      const Rational rhs = d.kappa * d.tau(v) * zeta_factor(v + ax + bx, ax, bx, Rational(N)) *
                           d.theta(v) *
                           qn(lambda_value(Rational(a), Rational(b), Rational(v + ax + bx)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace xop
