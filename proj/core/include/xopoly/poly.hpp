// Dense univariate polynomials over an exact coefficient ring, ascending
// order.  The zero polynomial is the empty coefficient list and has degree -1.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "xopoly/jet.hpp"
#include "xopoly/rational.hpp"

namespace xop {

template <class R>
class Poly {
 public:
  using value_type = R;

  Poly() = default;
  explicit Poly(const R& c) : coeffs_{c} { trim(); }
  explicit Poly(long c) : Poly(R(c)) {}
  explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(R(1)); }
  static Poly x() { return Poly(std::vector<R>{R(0), R(1)}); }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<R>& coefficients() const { return coeffs_; }

  R coefficient(long k) const {
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return R(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  R leading() const {
    if (coeffs_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
    return coeffs_.back();
  }

  friend bool operator==(const Poly& p, const Poly& q) { return p.coeffs_ == q.coeffs_; }
  friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

  friend Poly operator+(const Poly& p, const Poly& q) {
    std::vector<R> out(std::max(p.coeffs_.size(), q.coeffs_.size()), R(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = out[i] + p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i] = out[i] + q.coeffs_[i];
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
  friend Poly operator-(const Poly& p) {
    std::vector<R> out = p.coeffs_;
    for (auto& c : out) c = -c;
    return Poly(std::move(out));
  }
  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<R> out(p.coeffs_.size() + q.coeffs_.size() - 1, R(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
        out[i + j] = out[i + j] + p.coeffs_[i] * q.coeffs_[j];
    return Poly(std::move(out));
  }
  friend Poly operator*(const R& c, const Poly& p) {
    std::vector<R> out = p.coeffs_;
    for (auto& a : out) a = c * a;
    return Poly(std::move(out));
  }
  friend Poly operator*(const Poly& p, const R& c) { return c * p; }
  friend Poly operator/(const Poly& p, const R& c) {
    std::vector<R> out = p.coeffs_;
    for (auto& a : out) a = a / c;
    return Poly(std::move(out));
  }
  Poly& operator+=(const Poly& q) { return *this = *this + q; }
  Poly& operator-=(const Poly& q) { return *this = *this - q; }
  Poly& operator*=(const Poly& q) { return *this = *this * q; }

  // Horner evaluation; X needs ring ops and construction from R.
  template <class X>
  X operator()(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<R> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      out.push_back(coeffs_[i] * R(static_cast<long>(i)));
    return Poly(std::move(out));
  }

  // p(x + h), Horner in the shifted variable.
  Poly shifted(const R& h) const {
    const Poly lin(std::vector<R>{h, R(1)});
    Poly r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * lin + Poly(*it);
    return r;
  }

  Poly composed(const Poly& q) const {
    Poly r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * q + Poly(*it);
    return r;
  }

  Poly pow(long k) const {
    if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly r = one();
    for (long i = 0; i < k; ++i) r = r * *this;
    return r;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == R(0)) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

using QPoly = Poly<Rational>;

// Euclidean division over a coefficient field: p = q*d + r with deg r < deg d.
template <class R>
std::pair<Poly<R>, Poly<R>> divide(const Poly<R>& p, const Poly<R>& d) {
  if (d.is_zero()) throw std::invalid_argument("divide: zero divisor");
  Poly<R> q, r = p;
  const R dl = d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const long k = r.degree() - d.degree();
    const R c = r.leading() / dl;
    std::vector<R> mono(static_cast<std::size_t>(k) + 1, R(0));
    mono.back() = c;
    const Poly<R> term(std::move(mono));
    q += term;
    r -= term * d;
  }
  return {q, r};
}

// Division that must be exact; a nonzero remainder indicates a broken
// invariant upstream, so it throws std::logic_error rather than returning.
template <class R>
Poly<R> divide_exact(const Poly<R>& p, const Poly<R>& d) {
  auto [q, r] = divide(p, d);
  if (!r.is_zero()) throw std::logic_error("divide_exact: nonzero remainder");
  return q;
}

// Monic gcd over a coefficient field.
template <class R>
Poly<R> gcd(const Poly<R>& p, const Poly<R>& q) {
  Poly<R> a = p, b = q;
  while (!b.is_zero()) {
    auto [quot, rem] = divide(a, b);
    (void)quot;
    a = b;
    b = rem;
  }
  if (a.is_zero()) return a;
  return a / a.leading();
}

// Split a jet-coefficient polynomial into its value and derivative parts.
template <class R>
std::pair<Poly<R>, Poly<R>> jet_parts(const Poly<Jet<R>>& p) {
  std::vector<R> v, d;
  v.reserve(p.coefficients().size());
  d.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    v.push_back(c.val);
    d.push_back(c.der);
  }
  return {Poly<R>(std::move(v)), Poly<R>(std::move(d))};
}

// Antiderivative of p vanishing at lo.
template <class R>
Poly<R> integral_from(const Poly<R>& p, const R& lo) {
  std::vector<R> anti(p.coefficients().size() + 1, R(0));
  for (std::size_t i = 0; i < p.coefficients().size(); ++i)
    anti[i + 1] = p.coefficients()[i] / R(static_cast<long>(i) + 1);
  Poly<R> a(std::move(anti));
  return a - Poly<R>(a(lo));
}

}  // namespace xop
