#include "xopoly/quadrature.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/fpclassify.hpp>

#include <map>
#include <mutex>
#include <stdexcept>

namespace xop {

Real to_real(const Rational& q) { return q.convert_to<Real>(); }

Real eval_real(const QPoly& p, const Real& x) {
  Real acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + to_real(*it);
  return acc;
}

namespace {

// Legendre P_n and its derivative at x by the three-term recurrence.
std::pair<Real, Real> legendre_pair(int n, const Real& x) {
  Real p0 = 1, p1 = x;
  if (n == 0) return {p0, Real(0)};
  for (int k = 2; k <= n; ++k) {
    const Real p2 = (Real(2 * k - 1) * x * p1 - Real(k - 1) * p0) / Real(k);
    p0 = p1;
    p1 = p2;
  }
  const Real dp = Real(n) * (x * p1 - p0) / (x * x - 1);
  return {p1, dp};
}

std::vector<std::pair<Real, Real>> compute_rule(int n) {
  const Real pi = boost::math::constants::pi<Real>();
  // Roots come in +/- pairs; Newton from the Chebyshev-like initial guess
  // converges quadratically, so ~10 iterations reach 100 digits.
  std::vector<std::pair<Real, Real>> rule;
  rule.reserve(static_cast<std::size_t>(n));
  const Real tol("1e-105");
  for (int i = 1; i <= n; ++i) {
    Real x = cos(pi * Real(4 * i - 1) / Real(4 * n + 2));
    Real dp = 1;
    for (int iter = 0; iter < 200; ++iter) {
      const auto [p, d] = legendre_pair(n, x);
      dp = d;
      const Real dx = p / d;
      x -= dx;
      if (boost::multiprecision::abs(dx) < tol) {
        dp = legendre_pair(n, x).second;
        break;
      }
    }
    const Real w = Real(2) / ((1 - x * x) * dp * dp);
    rule.emplace_back(x, w);
  }
  return rule;
}

}  // namespace

const std::vector<std::pair<Real, Real>>& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  static std::map<int, std::vector<std::pair<Real, Real>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

Real integrate(const std::function<Real(const Real&)>& f, int nodes) {
  const auto& rule = gauss_legendre(nodes);
  Real acc = 0;
  for (const auto& [x, w] : rule) {
    const Real v = f(x);
    if (!boost::math::isfinite(v))
      throw std::domain_error("integrate: non-finite integrand value");
    acc += w * v;
  }
  return acc;
}

}  // namespace xop
