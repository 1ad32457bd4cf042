// Exact real-root counting on closed intervals via Sturm sequences.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <vector>

#include "xopoly/poly.hpp"
#include "xopoly/rational.hpp"

namespace xop {
namespace detail {

// Sign of p just left of / just right of x0: the sign of the lowest-order
// nonvanishing derivative, with the (-1)^k twist on the left.
inline int one_sided_sign(const QPoly& p, const Rational& x0, bool left) {
  QPoly q = p;
  for (long k = 0; !q.is_zero(); ++k) {
    const Rational v = q(x0);
    if (v != 0) {
      int s = sign(v);
      if (left && k % 2 != 0) s = -s;
      return s;
    }
    q = q.derivative();
  }
  return 0;  // identically zero polynomial
}

inline long sign_variations(const std::vector<int>& signs) {
  long count = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace detail

// Number of distinct real roots of p in the closed interval [lo, hi].
// Endpoint roots count.  The zero polynomial is rejected.
inline long sturm_roots_in_interval(const QPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_roots_in_interval: zero polynomial");
  if (lo > hi) throw std::invalid_argument("sturm_roots_in_interval: empty interval");
  if (p.degree() == 0) return 0;

  // Square-free part: same roots, all simple.
  const QPoly g = gcd(p, p.derivative());
  const QPoly q = (g.degree() == 0) ? p : divide_exact(p, g);
  if (q.degree() == 0) return 0;

  std::vector<QPoly> chain{q, q.derivative()};
  while (!chain.back().is_zero()) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    auto [quot, rem] = divide(a, b);
    (void)quot;
    if (rem.is_zero()) break;
    chain.push_back(-rem);
  }

  // Evaluating the chain with one-sided signs at lo^- and hi^+ turns the
  // half-open Sturm count into the closed-interval count.
  std::vector<int> at_lo, at_hi;
  at_lo.reserve(chain.size());
  at_hi.reserve(chain.size());
  for (const auto& s : chain) {
    if (s.is_zero()) continue;
    at_lo.push_back(detail::one_sided_sign(s, lo, /*left=*/true));
    at_hi.push_back(detail::one_sided_sign(s, hi, /*left=*/false));
  }
  return detail::sign_variations(at_lo) - detail::sign_variations(at_hi);
}

inline bool rootfree_on_interval(const QPoly& p, const Rational& lo, const Rational& hi) {
  return sturm_roots_in_interval(p, lo, hi) == 0;
}

}  // namespace xop
