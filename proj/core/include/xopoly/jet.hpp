// First-order jets a + b*eps (eps^2 = 0): exact forward-mode derivatives,
// used to differentiate family parameters at removable singularities.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <type_traits>

#include "xopoly/rational.hpp"

namespace xop {

// Inverting a jet whose value part is zero has no defined result; the error
// type is distinct so callers can tell it apart from plain domain errors.
class jet_inversion_error : public std::domain_error {
 public:
  jet_inversion_error()
      : std::domain_error("jet inversion requires a nonzero value part") {}
};

template <class R>
struct Jet {
  R val{};
  R der{};

  Jet() = default;
  Jet(const R& v) : val(v) {}  // NOLINT(google-explicit-constructor)
  Jet(const R& v, const R& d) : val(v), der(d) {}
  template <class I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
  Jet(I v) : val(R(v)) {}  // NOLINT(google-explicit-constructor)

  friend bool operator==(const Jet& x, const Jet& y) {
    return x.val == y.val && x.der == y.der;
  }
  friend bool operator!=(const Jet& x, const Jet& y) { return !(x == y); }

  friend Jet operator+(const Jet& x, const Jet& y) {
    return {x.val + y.val, x.der + y.der};
  }
  friend Jet operator-(const Jet& x, const Jet& y) {
    return {x.val - y.val, x.der - y.der};
  }
  friend Jet operator-(const Jet& x) { return {-x.val, -x.der}; }
  friend Jet operator*(const Jet& x, const Jet& y) {
    return {x.val * y.val, x.val * y.der + x.der * y.val};
  }

  Jet inverse() const {
    if (val == R(0)) throw jet_inversion_error();
    const R iv = R(1) / val;
    return {iv, -der * iv * iv};
  }
  friend Jet operator/(const Jet& x, const Jet& y) { return x * y.inverse(); }

  Jet& operator+=(const Jet& y) { return *this = *this + y; }
  Jet& operator-=(const Jet& y) { return *this = *this - y; }
  Jet& operator*=(const Jet& y) { return *this = *this * y; }
  Jet& operator/=(const Jet& y) { return *this = *this / y; }
};

using QJet = Jet<Rational>;

}  // namespace xop
