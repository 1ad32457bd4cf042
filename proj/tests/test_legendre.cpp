// Exceptional Legendre crosscheck: iterated-integral construction, its
// orthogonality, and the equivalence with the Jacobi parameter endpoint.
//
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "xopoly/legendre_xop.hpp"
#include "xopoly/quadrature.hpp"

using namespace xop;

TEST_CASE("classical Legendre by recurrence") {
  CHECK(legendre(0) == QPoly::one());
  CHECK(legendre(1) == QPoly::x());
  CHECK(legendre(2) ==
        QPoly(std::vector<Rational>{Rational(-1, 2), 0, Rational(3, 2)}));
  for (long m = 0; m <= 6; ++m) {
    CHECK(legendre(m)(Rational(1)) == 1);
    CHECK(legendre(m).degree() == m);
  }
  CHECK_THROWS_AS(legendre(-1), std::invalid_argument);
}

TEST_CASE("iterated integrals of Legendre products") {
  CHECK(legendre_R_entry(0, 0) == QPoly(std::vector<Rational>{1, 1}));
  CHECK(legendre_R_entry(0, 1) ==
        QPoly(std::vector<Rational>{Rational(-1, 2), 0, Rational(1, 2)}));
  for (long j = 0; j <= 4; ++j) {
    for (long k = 0; k <= 4; ++k) {
      const QPoly r = legendre_R_entry(j, k);
      CHECK(r == legendre_R_entry(k, j));
      CHECK(r(Rational(-1)) == 0);
      if (j != k) CHECK(r(Rational(1)) == 0);  // orthogonality over [-1,1]
    }
  }
}

TEST_CASE("tau determinant") {
  // Zero parameters give the unperturbed determinant.
  CHECK(legendre_tau({1}, {Rational(0)}) == QPoly::one());
  // One-term case expands by hand.
  CHECK(legendre_tau({1}, {Rational(2)}) ==
        QPoly::one() + Rational(2) * legendre_R_entry(1, 1));
  CHECK_THROWS_AS(legendre_tau({1, 2}, {Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(legendre_tau({2, 1}, {Rational(1), Rational(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(legendre_tau({-1}, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("bordered construction: hand value, degenerate tuple, index guard") {
  CHECK(xle_polynomial({1}, 0, {Rational(1)}) ==
        QPoly(std::vector<Rational>{Rational(4, 3), Rational(1, 2), 0,
                                    Rational(-1, 6)}));
  CHECK(xle_polynomial({}, 3, {}) == legendre(3));
  CHECK_THROWS_AS(xle_polynomial({1}, 1, {Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(xle_polynomial({1}, -2, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("orthogonality under the 1/tau^2 weight") {
  const std::vector<long> ms = {1, 2};
  const std::vector<Rational> ts = {Rational(1), Rational(1, 2)};
  const QPoly tau = legendre_tau(ms, ts);
  const std::vector<long> idx = {0, 3, 4, 5};
  std::vector<QPoly> xs;
  for (long i : idx) xs.push_back(xle_polynomial(ms, i, ts));
  const Real tol("1e-30");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const Real val = integrate(
          [&](const Real& x) {
            const Real t = eval_real(tau, x);
            return eval_real(xs[i], x) * eval_real(xs[j], x) / (t * t);
          },
          200);
      CAPTURE(idx[i]);
      CAPTURE(idx[j]);
      CHECK(abs(val) < tol);
    }
  }
}

TEST_CASE("equivalence with the Jacobi parameter endpoint") {
  for (long m1 : {1L, 2L}) {
    for (const Rational& t : {Rational(1), Rational(1, 2)}) {
      CAPTURE(m1);
      const GpeReport rep = verify_gpe_equivalence(m1, t, 4);
      CHECK(rep.pass);
      CHECK(rep.checks.size() == 4);
      for (const auto& c : rep.checks) {
        CAPTURE(c.degree);
        CHECK(c.proportional);
        CHECK(c.placeholder_free);
      }
      // The bottom member degenerates to a classical Legendre polynomial.
      CHECK(rep.checks[0].legendre_index == -1);
      CHECK(rep.checks[1].legendre_index >= 0);
    }
  }

  CHECK_THROWS_AS(verify_gpe_equivalence(0, Rational(1), 4), std::invalid_argument);
  CHECK_THROWS_AS(verify_gpe_equivalence(1, Rational(0), 4), std::invalid_argument);
  CHECK_THROWS_AS(verify_gpe_equivalence(1, Rational(1), 0), std::invalid_argument);
  // 2 m1 + 1 + 2 t = 0 leaves no image for the replaced parameter.
  CHECK_THROWS_AS(verify_gpe_equivalence(1, Rational(-3, 2), 4),
                  std::invalid_argument);
}
