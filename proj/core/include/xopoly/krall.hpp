// Krall-type dual Hahn family: bordered-determinant construction in the
// lambda variable, its discrete orthogonality measure, and the closed-form
// norm and boundary determinants entering the duality with the exceptional
// Hahn side.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <vector>

#include "xopoly/classical.hpp"
#include "xopoly/determinant.hpp"
#include "xopoly/discrete_measure.hpp"
#include "xopoly/perturbed.hpp"
#include "xopoly/poly.hpp"
#include "xopoly/rational.hpp"

namespace xop {

// W_n^{a,b,NN;M}(x) = Hhat_n^{-a,-b,-2-NN;M}(x); requires a >= b >= 1.
inline QPoly w_polynomial(long n, long a, long b, const Rational& NN, const ParamSet& M) {
  return perturbed_hahn(n, -a, -b, Rational(-2) - NN, M);
}

// Bordered matrix whose determinant (up to sign and the removed root factors)
// is the degree-n member.  First row: shifted dual Hahn polynomials in x;
// remaining rows: boundary evaluations.
inline Matrix<QPoly> krall_matrix(long n, long a, long b, const Rational& NN,
                                  const ParamSet& M, const std::vector<long>& um,
                                  const std::vector<long>& up) {
  if (!(a >= b && b >= 1)) throw std::invalid_argument("krall_matrix: requires a >= b >= 1");
  if (n < 0) throw std::invalid_argument("krall_matrix: negative degree");
  const long ncols = 1 + static_cast<long>(um.size()) + a + static_cast<long>(up.size());
  const auto aq = Rational(a), bq = Rational(b);
  const auto Rpoly = [&](long m) -> QPoly {
    if (m < 0) return QPoly::zero();
    return dual_hahn(m, aq, bq, NN);
  };

  Matrix<QPoly> mat;
  {
    std::vector<QPoly> row;
    for (long j = 1; j <= ncols; ++j)
      row.push_back(Rational(parity_sign(j - 1)) * Rpoly(n - a + j - 1));
    mat.push_back(std::move(row));
  }
  const auto eval_row = [&](long u) {
    std::vector<QPoly> row;
    const Rational pt = lambda_value(aq, bq, Rational(u));
    for (long j = 1; j <= ncols; ++j)
      row.push_back(QPoly(Rational(parity_sign(j - 1)) * Rpoly(n - a + j - 1)(pt)));
    return row;
  };
  for (long u : um) mat.push_back(eval_row(u));
  for (long f = b; f <= a + b - 1; ++f) {
    std::vector<QPoly> row;
    const QPoly wf = w_polynomial(f, a, b, NN, M);
    for (long j = 1; j <= ncols; ++j) {
      const Rational c =
          pochhammer(NN + Rational(a + b - n - j + 2), j - 1) * wf(Rational(-n + a - j));
      row.push_back(QPoly(c));
    }
    mat.push_back(std::move(row));
  }
  for (long u : up) mat.push_back(eval_row(u));
  return mat;
}

inline long krall_sign_exponent(long n, long a, long b, long nU) {
  return (n + a + b) * (nU + 1) + (a + b) * (a + b - 1) / 2 + b * (b - 1) / 2;
}

// q_n^{a,b,NN;M,U}(x): determinant of the bordered matrix divided exactly by
// the root factors at the U evaluation points, with the duality-normalizing
// sign.
inline QPoly krall_dual_hahn(long n, long a, long b, const Rational& NN, const ParamSet& M,
                             const std::vector<long>& um, const std::vector<long>& up) {
  const QPoly num = det_poly(krall_matrix(n, a, b, NN, M, um, up));
  QPoly den = QPoly::one();
  const auto aq = Rational(a), bq = Rational(b);
  for (const auto& uset : {um, up})
    for (long u : uset)
      den *= QPoly(std::vector<Rational>{-lambda_value(aq, bq, Rational(u)), 1});
  const QPoly q = divide_exact(num, den);
  const long nU = static_cast<long>(um.size() + up.size());
  return Rational(parity_sign(krall_sign_exponent(n, a, b, nU))) * q;
}

namespace detail {
inline Rational bordered_minor(long n, long a, long b, const Rational& NN, const ParamSet& M,
                               const std::vector<long>& um, const std::vector<long>& up,
                               bool drop_last_col) {
  const auto full = krall_matrix(n, a, b, NN, M, um, up);
  const std::size_t nrows = full.size();
  // Drop the polynomial row; keep all columns except one near the end.
  const std::size_t skip = drop_last_col ? nrows - 1 : nrows - 2;
  Matrix<Rational> mat;
  for (std::size_t i = 1; i < nrows; ++i) {
    std::vector<Rational> row;
    for (std::size_t j = 0; j < nrows; ++j) {
      if (j == skip) continue;
      row.push_back(full[i][j].coefficient(0));
    }
    mat.push_back(std::move(row));
  }
  const long nU = static_cast<long>(um.size() + up.size());
  return Rational(parity_sign(krall_sign_exponent(n, a, b, nU))) * det_cofactor(mat);
}
}  // namespace detail

// Boundary determinants Phi_n and Psi_n (the norm and three-term data).
inline Rational phi_factor(long n, long a, long b, const Rational& NN, const ParamSet& M,
                           const std::vector<long>& um, const std::vector<long>& up) {
  return detail::bordered_minor(n, a, b, NN, M, um, up, /*drop_last_col=*/true);
}

inline Rational psi_factor(long n, long a, long b, const Rational& NN, const ParamSet& M,
                           const std::vector<long>& um, const std::vector<long>& up) {
  return detail::bordered_minor(n, a, b, NN, M, um, up, /*drop_last_col=*/false);
}

// Base measure nu^{a,b,NN;M}: finitely many negative-lattice atoms carrying
// the M parameters plus a rescaled dual Hahn lattice.
inline DiscreteMeasure krall_measure_base(long a, long b, long NN, const ParamSet& M) {
  if (!(a >= b && b >= 1))
    throw std::invalid_argument("krall_measure_base: requires a >= b >= 1");
  if (NN < 0) throw std::invalid_argument("krall_measure_base: negative lattice size");
  const auto aq = Rational(a), bq = Rational(b);
  const Rational NNq(NN);
  std::vector<DiscreteMeasure::Atom> atoms;
  for (long x = -b; x <= -1; ++x) {
    const Rational mass = Rational(2 * x + a + b + 1) *
                          pochhammer(NNq + Rational(1 - x), x + b) /
                          pochhammer(NNq + Rational(b + 1), x + a + 1) * param_at(M, x + b);
    atoms.emplace_back(lambda_value(aq, bq, Rational(x)), mass);
  }
  const DiscreteMeasure rho = dual_hahn_measure(bq, aq, NN);  // swapped parameters
  const Rational c2 =
      rational_pow(pochhammer(NNq + 1, b), 2) / pochhammer(bq + 1, a - b);
  for (long x = 0; x <= NN; ++x) {
    Rational den = 1;
    for (long i = 0; i < b; ++i) den *= Rational(x + a + i + 1) * Rational(x + b - i);
    atoms.emplace_back(rho.atoms()[static_cast<std::size_t>(x)].first,
                       c2 * rho.atoms()[static_cast<std::size_t>(x)].second / den);
  }
  return DiscreteMeasure(std::move(atoms));
}

// nu^{M,U}: base measure reweighted by the root factors; atoms at the U
// points vanish.
inline DiscreteMeasure krall_measure(long a, long b, long NN, const ParamSet& M,
                                     const std::vector<long>& um, const std::vector<long>& up) {
  const auto aq = Rational(a), bq = Rational(b);
  QPoly fac = QPoly::one();
  for (const auto& uset : {um, up})
    for (long u : uset)
      fac *= QPoly(std::vector<Rational>{-lambda_value(aq, bq, Rational(u)), 1});
  return krall_measure_base(a, b, NN, M).reweighted(fac);
}

// zeta_v factor of the duality normalization.
inline Rational zeta_factor(long v, long ax, long bx, const Rational& N) {
  return pochhammer_ext(-N - Rational(ax + bx), v) * pochhammer(Rational(v + 1), -ax) *
         Rational(factorial(v - ax - bx));
}

// Squared norm of q_n under nu^{M,U} (closed form).
inline Rational krall_norm(long n, long a, long b, long NN, const ParamSet& M,
                           const std::vector<long>& um, const std::vector<long>& up) {
  const long nU = static_cast<long>(um.size() + up.size());
  const Rational NNq(NN);
  const Rational base =
      -Rational(factorial(n)) * rational_pow(Rational(factorial(NN + b)), 2) /
      (Rational(factorial(n + nU)) * Rational(factorial(NN + a - n)) *
       Rational(factorial(NN + a + b - n)));
  return base * rational_pow(NNq + Rational(a + b - n), a) *
         phi_factor(n, a, b, NNq, M, um, up) * phi_factor(n + 1, a, b, NNq, M, um, up);
}

}  // namespace xop
