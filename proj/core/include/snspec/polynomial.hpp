#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace snspec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * @brief Dense univariate polynomial with exact rational coefficients.
 *
 * Coefficients are stored lowest power first and kept normalized: the
 * leading coefficient is nonzero unless the polynomial is zero. All
 * arithmetic (addition, multiplication, argument shift/scale) is exact;
 * floating point enters only through evaluate()/double_coefficients().
 */
class Polynomial {
 public:
  Polynomial() = default;  // zero polynomial
  explicit Polynomial(std::vector<Rational> ascending_coefficients);

  static Polynomial constant(Rational c);
  static Polynomial monomial(int power, Rational coefficient);

  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^k (zero beyond the degree).
  const Rational& coefficient(int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;

  /// p(c*x): scales the argument.
  Polynomial scaled_argument(const Rational& c) const;

  /// p(x + a): shifts the argument.
  Polynomial shifted_argument(const Rational& a) const;

  bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

  /// Coefficients rounded to double, lowest power first.
  std::vector<double> double_coefficients() const;

  /// Horner evaluation after exact-to-double coefficient conversion.
  double evaluate(double x) const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Free-function spelling of Polynomial::evaluate.
double poly_eval(const Polynomial& p, double x);

/// Horner evaluation of pre-converted coefficients (lowest power first).
double poly_eval(const std::vector<double>& ascending_coefficients, double x);

/**
 * @brief A polynomial whose odd-power coefficients are all exactly zero.
 *
 * Construction verifies the evenness; it is an internal invariant of the
 * overlap polynomials, not a rounding statement.
 */
class EvenPolynomial {
 public:
  explicit EvenPolynomial(Polynomial p);

  const Polynomial& poly() const { return poly_; }
  int degree() const { return poly_.degree(); }
  const Rational& coefficient(int k) const { return poly_.coefficient(k); }
  double evaluate(double x) const { return poly_.evaluate(x); }
  std::vector<double> double_coefficients() const { return poly_.double_coefficients(); }

 private:
  Polynomial poly_;
};

/// Line-oriented dump of exact coefficients: "power numerator denominator".
std::string format_coefficient_table(const Polynomial& p);

}  // namespace snspec
