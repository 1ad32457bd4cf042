// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

#include "xopoly/poly.hpp"
#include "xopoly/rational.hpp"

namespace xop {

// Quotient of two exact polynomials.  Not reduced to lowest terms; equality
// therefore cross-multiplies instead of comparing representations.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(QPoly::one()) {}
  explicit RationalFunction(QPoly num) : num_(std::move(num)), den_(QPoly::one()) {}
  RationalFunction(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
      throw std::invalid_argument("RationalFunction: zero denominator");
  }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  friend bool operator==(const RationalFunction& f, const RationalFunction& g) {
    return f.num_ * g.den_ == g.num_ * f.den_;
  }
  friend bool operator!=(const RationalFunction& f, const RationalFunction& g) {
    return !(f == g);
  }

  friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
    return {f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_};
  }
  friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
    return {f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_};
  }
  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
    return {f.num_ * g.num_, f.den_ * g.den_};
  }
  friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
    if (g.num_.is_zero())
      throw std::invalid_argument("RationalFunction: division by zero function");
    return {f.num_ * g.den_, f.den_ * g.num_};
  }

  Rational operator()(const Rational& x) const {
    const Rational d = den_(x);
    if (d == 0) throw std::domain_error("RationalFunction: evaluation at a pole");
    return num_(x) / d;
  }

 private:
  QPoly num_;
  QPoly den_;
};

}  // namespace xop
