// Exact scalar/polynomial layer: rationals, jets, polynomials, determinants,
// Sturm root counting, quadrature, serialization building blocks.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "xopoly/determinant.hpp"
#include "xopoly/discrete_measure.hpp"
#include "xopoly/jet.hpp"
#include "xopoly/poly.hpp"
#include "xopoly/quadrature.hpp"
#include "xopoly/rational.hpp"
#include "xopoly/rational_function.hpp"
#include "xopoly/sturm.hpp"

using namespace xop;

TEST_CASE("rational helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);

  CHECK(pochhammer(Rational(3), 0) == 1);
  CHECK(pochhammer(Rational(3), 2) == 12);
  CHECK(pochhammer(Rational(-2), 3) == 0);
  CHECK_THROWS_AS(pochhammer(Rational(1), -1), std::invalid_argument);

  // (x)_{-k} = 1 / (x-k)_k
  CHECK(pochhammer_ext(Rational(5), -2) == Rational(1, 12));
  CHECK(pochhammer_ext(Rational(5), 2) == pochhammer(Rational(5), 2));
  CHECK_THROWS_AS(pochhammer_ext(Rational(2), -3), std::domain_error);

  CHECK(binomial(Rational(4), 2) == 6);
  CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(binomial(Rational(4), -1) == 0);

  CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(rational_pow(Rational(7), 0) == 1);
  CHECK_THROWS_AS(rational_pow(Rational(0), -1), std::domain_error);

  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(ceil_div(6, 2) == 3);
  CHECK_THROWS_AS(ceil_div(1, 0), std::invalid_argument);

  CHECK(parity_sign(4) == 1);
  CHECK(parity_sign(-3) == -1);
}

TEST_CASE("rational strings") {
  CHECK(to_string(Rational(-3, 7)) == "-3/7");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(parse_rational("22/7") == Rational(22, 7));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("jets differentiate polynomials") {
  const QPoly p(std::vector<Rational>{Rational(3), Rational(-2), Rational(0), Rational(5)});
  const Rational x0(4, 3);
  const QJet r = p(QJet(x0, Rational(1)));
  CHECK(r.val == p(x0));
  CHECK(r.der == p.derivative()(x0));

  const QJet a(Rational(2), Rational(3));
  CHECK(a * a.inverse() == QJet(Rational(1), Rational(0)));
  CHECK_THROWS_AS(QJet(Rational(0), Rational(1)).inverse(), jet_inversion_error);
}

TEST_CASE("polynomial ring basics") {
  const QPoly x = QPoly::x();
  const QPoly p = x * x - QPoly(Rational(1));
  CHECK(p.degree() == 2);
  CHECK(QPoly::zero().degree() == -1);
  CHECK(QPoly::zero().is_zero());
  CHECK_THROWS_AS(QPoly::zero().leading(), std::domain_error);

  // shifted / composed agree with evaluation
  const QPoly q = p.shifted(Rational(2, 5));
  for (long k = -2; k <= 2; ++k)
    CHECK(q(Rational(k)) == p(Rational(k) + Rational(2, 5)));
  const QPoly comp = p.composed(x * x + QPoly(Rational(1)));
  CHECK(comp(Rational(2)) == p(Rational(5)));

  // division with remainder and exact division
  const auto [quot, rem] = divide(p * q + x, p);
  CHECK(quot == q);
  CHECK(rem == x);
  CHECK(divide_exact(p * q, q) == p);
  CHECK_THROWS_AS(divide_exact(p * q + x, q), std::logic_error);
  CHECK_THROWS_AS(divide(p, QPoly::zero()), std::invalid_argument);

  // gcd is monic
  const QPoly g = gcd(p * q, p * x);
  CHECK(g.leading() == 1);
  CHECK(divide(p, g).second.is_zero());

  // antiderivative: d/dx integral_from(p, lo) == p and vanishes at lo
  const QPoly ip = integral_from(p, Rational(-1));
  CHECK(ip.derivative() == p);
  CHECK(ip(Rational(-1)) == 0);
}

TEST_CASE("rational functions") {
  const QPoly x = QPoly::x();
  const RationalFunction f(x * x - QPoly(Rational(1)), x + QPoly(Rational(1)));
  const RationalFunction g(x - QPoly(Rational(1)), QPoly::one());
  CHECK(f == g);
  CHECK((f + g)(Rational(3)) == 4);
  CHECK_THROWS_AS(RationalFunction(x, QPoly::zero()), std::invalid_argument);
  const RationalFunction h(QPoly::one(), x);
  CHECK_THROWS_AS(h(Rational(0)), std::domain_error);
}

TEST_CASE("discrete measures") {
  DiscreteMeasure mu({{Rational(1), Rational(2)},
                      {Rational(0), Rational(1, 2)},
                      {Rational(1), Rational(3)},
                      {Rational(2), Rational(0)}});
  CHECK(mu.size() == 2);  // equal points merged, zero mass dropped
  CHECK(mu.mass_at(Rational(1)) == 5);
  CHECK(mu.mass_at(Rational(2)) == 0);
  CHECK(mu.all_positive());
  const QPoly x = QPoly::x();
  CHECK(mu.integrate(x) == Rational(5));                 // 0*(1/2) + 1*5
  CHECK(mu.inner(x, x + QPoly(Rational(1))) == 10);      // 5*1*2
  const DiscreteMeasure nu = mu.reweighted(x - QPoly(Rational(1)));
  CHECK(nu.mass_at(Rational(1)) == 0);
  CHECK(nu.mass_at(Rational(0)) == Rational(-1, 2));
  CHECK_FALSE(nu.all_positive());
}

TEST_CASE("determinants") {
  const QPoly x = QPoly::x();
  CHECK(det_poly({{x}}) == x);
  CHECK(det_poly({{x, QPoly::one()}, {QPoly::one(), x}}) == x * x - QPoly(Rational(1)));
  CHECK(det_poly({}) == QPoly::one());

  // zero column
  CHECK(det_poly({{QPoly::zero(), x}, {QPoly::zero(), x}}).is_zero());

  // random matrices: fraction-free elimination vs cofactor expansion
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 6; ++trial) {
    Matrix<QPoly> m(4, std::vector<QPoly>(4));
    for (auto& row : m)
      for (auto& e : row)
        e = QPoly(std::vector<Rational>{Rational(coef(rng)), Rational(coef(rng))});
    CHECK(det_poly(m) == det_cofactor(m));
  }

  // multiplicativity on rational matrices
  for (int trial = 0; trial < 4; ++trial) {
    Matrix<Rational> a(4, std::vector<Rational>(4)), b = a;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        a[i][j] = Rational(coef(rng));
        b[i][j] = Rational(coef(rng), 3);
      }
    Matrix<Rational> ab(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) ab[i][j] += a[i][k] * b[k][j];
    CHECK(det_cofactor(ab) == det_cofactor(a) * det_cofactor(b));
  }

  CHECK_THROWS_AS(det_poly({{x, x}}), std::invalid_argument);

  CHECK(vandermonde({Rational(1), Rational(2)}) == 1);
  CHECK(vandermonde({Rational(1), Rational(2), Rational(4)}) == 6);
  CHECK(vandermonde({Rational(0), Rational(1), Rational(2), Rational(3)}) == 12);
  CHECK_THROWS_AS(vandermonde({Rational(1), Rational(1)}), std::invalid_argument);
}

TEST_CASE("sturm root counting on closed intervals") {
  const QPoly x = QPoly::x();
  const QPoly one = QPoly::one();
  CHECK(sturm_roots_in_interval(x * x - one, Rational(-1), Rational(1)) == 2);
  CHECK(sturm_roots_in_interval(x * x + one, Rational(-1), Rational(1)) == 0);
  CHECK(sturm_roots_in_interval(x * (x - QPoly(Rational(3))), Rational(-1), Rational(1)) == 1);
  // endpoint roots count; multiplicities collapse
  CHECK(sturm_roots_in_interval((x - one) * (x - one), Rational(-1), Rational(1)) == 1);
  CHECK(sturm_roots_in_interval(x, Rational(0), Rational(0)) == 1);
  CHECK(sturm_roots_in_interval(QPoly(Rational(7)), Rational(0), Rational(1)) == 0);
  CHECK_THROWS_AS(sturm_roots_in_interval(QPoly::zero(), Rational(0), Rational(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(sturm_roots_in_interval(x, Rational(1), Rational(0)),
                  std::invalid_argument);
  CHECK(rootfree_on_interval(x * x + one, Rational(-1), Rational(1)));
  CHECK_FALSE(rootfree_on_interval(x, Rational(-1), Rational(1)));
}

TEST_CASE("gauss-legendre quadrature") {
  const Real tol("1e-30");
  using boost::multiprecision::abs;
  CHECK(abs(integrate([](const Real&) { return Real(1); }, 8) - 2) < tol);
  CHECK(abs(integrate([](const Real& x) { return x * x; }, 8) - Real(2) / 3) < tol);
  CHECK(abs(integrate([](const Real& x) { return (1 - x) * (1 + x); }, 8) - Real(4) / 3) <
        tol);

  const auto& rule = gauss_legendre(16);
  Real wsum(0);
  for (const auto& [node, weight] : rule) wsum += weight;
  CHECK(abs(wsum - 2) < tol);
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
  CHECK_THROWS_AS(
      integrate([](const Real&) { return std::numeric_limits<Real>::quiet_NaN(); }, 4),
      std::domain_error);

  CHECK(to_real(Rational(1, 3)) * 3 == 1);
  const QPoly p(std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(eval_real(p, Real(2)) == 5);
}
