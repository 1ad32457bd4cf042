// Exact scalar layer: arbitrary-precision rationals plus the factorial /
// Pochhammer helpers every family construction leans on.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace xop {

// Expression templates are turned off so that values of these types deduce
// cleanly through generic template code (e.g. pochhammer(-x, m)).
using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int,
                                  boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

inline int sign(const Rational& q) { return q.sign(); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// (-1)^e for any integer e.
inline int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

// Rising factorial (x)_m = x (x+1) ... (x+m-1); empty product when m = 0.
// Works over any commutative ring R constructible from long.
template <class R>
R pochhammer(const R& x, long m) {
  if (m < 0) throw std::invalid_argument("pochhammer: negative length");
  R r(1);
  for (long i = 0; i < m; ++i) r = r * (x + R(i));
  return r;
}

// Extension to negative lengths via (x)_{-k} = 1 / (x-k)_k.  A zero factor in
// the denominator means the value is a genuine pole.
template <class R>
R pochhammer_ext(const R& x, long m) {
  if (m >= 0) return pochhammer(x, m);
  R d(1);
  for (long i = 1; i <= -m; ++i) d = d * (x - R(i));
  if (d == R(0)) throw std::domain_error("pochhammer_ext: pole at negative length");
  return R(1) / d;
}

// Generalized binomial coefficient binom(z, k) = (z-k+1)_k / k! for k >= 0.
template <class R>
R binomial(const R& z, long k) {
  if (k < 0) return R(0);
  R r = pochhammer(z - R(k) + R(1), k);
  Integer f = factorial(k);
  return r / R(Rational(f));
}

inline Rational rational_pow(const Rational& q, long e) {
  if (e < 0) {
    if (q == 0) throw std::domain_error("rational_pow: zero base, negative exponent");
    return Rational(1) / rational_pow(q, -e);
  }
  Rational r = 1, b = q;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline long to_long(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("to_long: not an integer");
  return boost::multiprecision::numerator(q).convert_to<long>();
}

// ceil(p / q) for integers, q > 0.
inline long ceil_div(long p, long q) {
  if (q <= 0) throw std::invalid_argument("ceil_div: nonpositive divisor");
  const long d = p / q, r = p % q;
  return d + (r > 0 ? 1 : 0);
}

// Canonical text form: "num/den" in lowest terms, "/den" omitted when den = 1.
inline std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Parse "num" or "num/den"; throws std::invalid_argument on malformed input
// (including a zero denominator).
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    const Integer num(s.substr(0, slash));
    const Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num) / Rational(den);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
  }
}

}  // namespace xop
