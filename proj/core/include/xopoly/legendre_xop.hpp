// Exceptional Legendre crosscheck: an independent construction through
// iterated Legendre integrals, used to validate the parameter-endpoint
// specialization of the exceptional Jacobi family.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "xopoly/poly.hpp"
#include "xopoly/rational.hpp"

namespace xop {

// Classical Legendre polynomial by the three-term recurrence.
QPoly legendre(long m);

// R_{j,k}(z) = integral_{-1}^{z} P_j P_k; polynomial, symmetric in (j, k),
// and vanishing at z = 1 for j != k.
QPoly legendre_R_entry(long j, long k);

// tau_m(z; t) = det(delta_jk + t_k R_{m_j, m_k}(z)).
QPoly legendre_tau(const std::vector<long>& ms, const std::vector<Rational>& ts);

// Exceptional Legendre polynomial for the tuple m with parameters t, via the
// bordered determinant (adjugate form, no division).  Requires i not in m;
// the empty tuple returns the classical P_i.  A tau that vanishes
// identically is rejected.
QPoly xle_polynomial(const std::vector<long>& ms, long i, const std::vector<Rational>& ts);

struct GpeCheck {
  long degree = 0;      // member degree on the Jacobi side
  long legendre_index = -1;  // -1 marks the trivial bottom member
  bool proportional = false;
  bool placeholder_free = false;
};

struct GpeReport {
  bool pass = false;
  std::vector<GpeCheck> checks;
};

// Equivalence of the exceptional Jacobi family at the Legendre parameter
// endpoint with the integral construction above: the first `members` family
// members must be proportional (x-independent ratio) to the matching
// exceptional Legendre polynomials, independently of the placeholder
// parameters.  t = 0 is rejected.
GpeReport verify_gpe_equivalence(long m1, const Rational& t, long members);

}  // namespace xop
