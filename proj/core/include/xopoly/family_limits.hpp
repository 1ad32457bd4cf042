// N -> infinity degeneration of the discrete family into the continuous one:
// scaled finite-N evaluations against the closed-form limit constants.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "xopoly/exceptional_hahn.hpp"
#include "xopoly/exceptional_jacobi.hpp"

namespace xop {

struct LimitSequence {
  Rational target;               // limit constant times the continuous value
  std::vector<Rational> errors;  // |scaled finite-N value - target|, one per N
  bool exact = false;            // already equal at every tested finite N
};

// Strictly decreasing, allowing the all-zero (exact) degenerate case.
inline bool limit_converges(const LimitSequence& seq) {
  if (seq.exact) return true;
  for (std::size_t i = 1; i < seq.errors.size(); ++i)
    if (!(seq.errors[i] < seq.errors[i - 1])) return false;
  return true;
}

// Member of degree n, evaluated at x after the substitution z = (1-x) N / 2
// and division by N^n, against the continuous member.
inline LimitSequence member_limit_sequence(FamilySpec spec, long n, const Rational& x,
                                           const std::vector<long>& Ns) {
  spec.N.reset();
  LimitSequence seq;
  seq.target = limit_member_constant(n, spec) * xjacobi(n, spec)(x);
  seq.exact = true;
  for (long N : Ns) {
    FamilySpec at_N = spec;
    at_N.N = N;
    const Rational val =
        xhahn(n, at_N)((1 - x) * Rational(N) / 2) / rational_pow(Rational(N), n);
    seq.errors.push_back(abs(val - seq.target));
    seq.exact = seq.exact && seq.errors.back() == 0;
  }
  return seq;
}

// Same degeneration for the denominator polynomial (degree u_F + n_F).
inline LimitSequence omega_limit_sequence(FamilySpec spec, const Rational& x,
                                          const std::vector<long>& Ns) {
  spec.N.reset();
  const long deg = u_F(spec.F) + static_cast<long>(spec.F.size());
  LimitSequence seq;
  seq.target = limit_omega_constant(spec) * omega_jacobi(spec)(x);
  seq.exact = true;
  for (long N : Ns) {
    FamilySpec at_N = spec;
    at_N.N = N;
    const Rational val =
        omega_hahn(at_N)((1 - x) * Rational(N) / 2) / rational_pow(Rational(N), deg);
    seq.errors.push_back(abs(val - seq.target));
    seq.exact = seq.exact && seq.errors.back() == 0;
  }
  return seq;
}

}  // namespace xop
