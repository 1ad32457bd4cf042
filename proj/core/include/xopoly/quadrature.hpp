// High-precision Gauss-Legendre quadrature on [-1, 1] (~100 significant
// digits), for the integral identities that have no exact finite form.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <functional>
#include <utility>
#include <vector>

#include "xopoly/poly.hpp"
#include "xopoly/rational.hpp"

namespace xop {

using Real = boost::multiprecision::cpp_bin_float_100;

Real to_real(const Rational& q);

// Nodes and weights of the n-point rule; computed once per n and cached.
const std::vector<std::pair<Real, Real>>& gauss_legendre(int n);

// Integrate f over [-1, 1] with the n-point rule.  A non-finite integrand
// value raises std::domain_error.
Real integrate(const std::function<Real(const Real&)>& f, int nodes);

Real eval_real(const QPoly& p, const Real& x);

}  // namespace xop
