#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "snspec/errors.hpp"
#include "snspec/hermite.hpp"
#include "snspec/polynomial.hpp"

using namespace snspec;

namespace {

Polynomial from_ints(std::initializer_list<long long> ascending) {
  std::vector<Rational> c;
  for (long long v : ascending) c.emplace_back(v);
  return Polynomial(std::move(c));
}

// (2k-1)!! with (-1)!! = 1.
BigInt double_factorial_odd(int k) {
  BigInt r = 1;
  for (int j = 1; j <= k; ++j) r *= 2 * j - 1;
  return r;
}

}  // namespace

TEST_CASE("polynomial arithmetic is exact") {
  const Polynomial x = Polynomial::monomial(1, 1);
  const Polynomial one = Polynomial::constant(1);

  // (x+1)^2 = x^2 + 2x + 1
  const Polynomial p = (x + one) * (x + one);
  CHECK(p == from_ints({1, 2, 1}));

  // subtraction cancels exactly and renormalizes the degree
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);

  // argument scaling: p(2x) with p = x^2 + 2x + 1 -> 4x^2 + 4x + 1
  CHECK(p.scaled_argument(2) == from_ints({1, 4, 4}));

  // argument shift: (x+1)^2 shifted by a=-1 -> x^2
  CHECK(p.shifted_argument(-1) == from_ints({0, 0, 1}));

  // shift with rational offset keeps exactness: (x + 1/2)^2
  const Polynomial q = (x + Polynomial::constant(Rational(1, 2))) *
                       (x + Polynomial::constant(Rational(1, 2)));
  CHECK(q.coefficient(0) == Rational(1, 4));
  CHECK(x.shifted_argument(Rational(1, 2)) * x.shifted_argument(Rational(1, 2)) == q);
}

TEST_CASE("hermite polynomials") {
  CHECK(hermite(0) == from_ints({1}));
  CHECK(hermite(1) == from_ints({0, 2}));
  CHECK(hermite(2) == from_ints({-2, 0, 4}));
  CHECK(hermite(5) == from_ints({0, 120, 0, -160, 0, 32}));
  CHECK(hermite(2).evaluate(1.0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(hermite(-1), DomainError);

  // recurrence invariant H_{n+1} = 2x H_n - 2n H_{n-1}, checked exactly
  const Polynomial two_x = Polynomial::monomial(1, 2);
  for (int n = 1; n <= 12; ++n) {
    CHECK(hermite(n + 1) == two_x * hermite(n) - hermite(n - 1) * Rational(2 * n));
  }
}

TEST_CASE("hermite orthogonality under Gauss-Hermite quadrature") {
  // 20-point Gauss-Hermite rule (weight exp(-x^2)); exact for degree <= 39.
  static constexpr double nodes[10] = {
      2.45340708300901239e-01, 7.37473728545394391e-01, 1.23407621539532308e+00,
      1.73853771211658614e+00, 2.25497400208927568e+00, 2.78880605842813045e+00,
      3.34785456738321630e+00, 3.94476404011562520e+00, 4.60368244955074424e+00,
      5.38748089001123276e+00};
  static constexpr double weights[10] = {
      4.62243669600610085e-01, 2.86675505362834149e-01, 1.09017206020023294e-01,
      2.48105208874636433e-02, 3.24377334223785669e-03, 2.28338636016353646e-04,
      7.80255647853205987e-06, 1.08606937076927821e-07, 4.39934099227317473e-10,
      2.22939364553414471e-13};

  std::vector<std::vector<double>> h;
  for (int n = 0; n <= 6; ++n) h.push_back(hermite(n).double_coefficients());

  const double sqrt_pi = std::sqrt(std::acos(-1.0));
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      double integral = 0.0;
      for (int j = 0; j < 10; ++j) {
        const double plus = poly_eval(h[m], nodes[j]) * poly_eval(h[n], nodes[j]);
        const double minus = poly_eval(h[m], -nodes[j]) * poly_eval(h[n], -nodes[j]);
        integral += weights[j] * (plus + minus);
      }
      double expected = 0.0;
      if (m == n) {
        expected = sqrt_pi * std::pow(2.0, n) * std::tgamma(n + 1.0);
        CHECK(std::abs(integral - expected) <= 1e-10 * expected);
      } else {
        const double scale =
            sqrt_pi * std::pow(2.0, (m + n) / 2.0) *
            std::sqrt(std::tgamma(m + 1.0) * std::tgamma(n + 1.0));
        CHECK(std::abs(integral) <= 1e-10 * scale);
      }
    }
  }
}

TEST_CASE("P_0 and P_1 exact coefficient lists") {
  const EvenPolynomial p0 = p_poly(0);
  CHECK(p0.degree() == 0);
  CHECK(p0.coefficient(0) == Rational(1));

  const EvenPolynomial p1 = p_poly(1);
  CHECK(p1.degree() == 4);
  CHECK(p1.coefficient(0) == Rational(3, 4));
  CHECK(p1.coefficient(1) == Rational(0));
  CHECK(p1.coefficient(2) == Rational(-1, 2));
  CHECK(p1.coefficient(3) == Rational(0));
  CHECK(p1.coefficient(4) == Rational(1, 4));
}

TEST_CASE("P_2 exact coefficient list") {
  // Independently derived with a symbolic integrator:
  // P_2 = 41/64 - 13 z^2/16 + 25 z^4/32 - 3 z^6/16 + z^8/64.
  const EvenPolynomial p2 = p_poly(2);
  CHECK(p2.degree() == 8);
  CHECK(p2.coefficient(0) == Rational(41, 64));
  CHECK(p2.coefficient(2) == Rational(-13, 16));
  CHECK(p2.coefficient(4) == Rational(25, 32));
  CHECK(p2.coefficient(6) == Rational(-3, 16));
  CHECK(p2.coefficient(8) == Rational(1, 64));
}

TEST_CASE("P_n structure for n <= 14") {
  for (int n = 0; n <= 14; ++n) {
    const EvenPolynomial& p = p_poly_cached(n).exact;
    CHECK(p.degree() == 4 * n);
    CHECK(p.coefficient(0) > 0);
    for (int k = 1; k <= p.degree(); k += 2) CHECK(p.coefficient(k) == 0);
  }
}

TEST_CASE("P_n Gaussian moment identities hold exactly") {
  // Integrating the defining double integral in closed form gives, for all n,
  //   Int_0^inf exp(-z^2/2) P_n(z) dz       = sqrt(pi/2)
  //   Int_0^inf z^2 exp(-z^2/2) P_n(z) dz   = sqrt(2 pi) (n + 1/2)
  // which in coefficient space reduce to exact rational sums:
  //   sum_k p_{2k} (2k-1)!! = 1   and   sum_k p_{2k} (2k+1)!! = 2n + 1.
  for (int n = 0; n <= 14; ++n) {
    const EvenPolynomial& p = p_poly_cached(n).exact;
    Rational s1{0}, s2{0};
    for (int k = 0; 2 * k <= p.degree(); ++k) {
      s1 += p.coefficient(2 * k) * Rational(double_factorial_odd(k));
      s2 += p.coefficient(2 * k) * Rational(double_factorial_odd(k + 1));
    }
    CHECK(s1 == Rational(1));
    CHECK(s2 == Rational(2 * n + 1));
  }
}

TEST_CASE("P_n evaluation examples") {
  CHECK(p_poly_cached(0).exact.evaluate(7.3) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p_poly_cached(1).exact.evaluate(0.0) == doctest::Approx(0.75).epsilon(1e-14));
  // P_1(2) = 3/4 - 2 + 4
  CHECK(p_poly_cached(1).exact.evaluate(2.0) == doctest::Approx(2.75).epsilon(1e-14));
}

TEST_CASE("P_n symmetry is exact in floating point") {
  std::mt19937 rng(20260810);
  std::uniform_real_distribution<double> dist(-20.0, 20.0);
  for (int n = 0; n <= 14; ++n) {
    const auto& coeffs = p_poly_cached(n).coefficients;
    for (int trial = 0; trial < 200; ++trial) {
      const double z = dist(rng);
      CHECK(poly_eval(coeffs, z) == poly_eval(coeffs, -z));
    }
  }
}

TEST_CASE("even polynomial rejects odd coefficients") {
  CHECK_THROWS_AS(EvenPolynomial(Polynomial::monomial(3, 1)), DomainError);
  CHECK_NOTHROW(EvenPolynomial(Polynomial::monomial(4, 1)));
}

TEST_CASE("construction ceiling warns but does not fail") {
  const int old = p_poly_ceiling();
  CHECK(old == 14);
  set_p_poly_ceiling(2);
  CHECK_NOTHROW(p_poly(3));  // allowed, logs a note
  set_p_poly_ceiling(old);
  CHECK_THROWS_AS(set_p_poly_ceiling(-1), DomainError);
}

TEST_CASE("cache is consistent under concurrent access") {
  std::vector<std::thread> workers;
  std::vector<const PPolyTables*> seen(8, nullptr);
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([t, &seen] { seen[t] = &p_poly_cached(9); });
  }
  for (auto& w : workers) w.join();
  for (int t = 1; t < 8; ++t) CHECK(seen[t] == seen[0]);
}

TEST_CASE("coefficient table dump") {
  CHECK(format_coefficient_table(p_poly(1).poly()) ==
        "0 3 4\n1 0 1\n2 -1 2\n3 0 1\n4 1 4\n");
  CHECK(format_coefficient_table(Polynomial()) == "0 0 1\n");
}
