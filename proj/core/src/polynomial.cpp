#include "snspec/polynomial.hpp"

#include <sstream>

#include "snspec/errors.hpp"

namespace snspec {

namespace {
const Rational kZero{0};
}

Polynomial::Polynomial(std::vector<Rational> ascending_coefficients)
    : coeffs_(std::move(ascending_coefficients)) {
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Rational c) {
  return Polynomial(std::vector<Rational>{std::move(c)});
}

Polynomial Polynomial::monomial(int power, Rational coefficient) {
  if (power < 0) throw DomainError("monomial power must be non-negative");
  std::vector<Rational> c(static_cast<std::size_t>(power) + 1, Rational(0));
  c.back() = std::move(coefficient);
  return Polynomial(std::move(c));
}

const Rational& Polynomial::coefficient(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] -= other.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return Polynomial();
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c *= scalar;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled_argument(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  Rational power{1};
  for (std::size_t k = 1; k < out.size(); ++k) {
    power *= c;
    out[k] *= power;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted_argument(const Rational& a) const {
  // p(x + a) via binomial expansion of each monomial.
  if (is_zero()) return Polynomial();
  const std::size_t n = coeffs_.size();
  // Pascal triangle of the needed size.
  std::vector<std::vector<BigInt>> binom(n);
  for (std::size_t k = 0; k < n; ++k) {
    binom[k].resize(k + 1);
    binom[k][0] = binom[k][k] = 1;
    for (std::size_t j = 1; j < k; ++j) {
      binom[k][j] = binom[k - 1][j - 1] + binom[k - 1][j];
    }
  }
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    if (coeffs_[k] == 0) continue;
    Rational apow{1};
    for (std::size_t j = 0; j <= k; ++j) {
      // coefficient of x^(k-j): C(k, j) * a^j
      out[k - j] += coeffs_[k] * Rational(binom[k][j]) * apow;
      apow *= a;
    }
  }
  return Polynomial(std::move(out));
}

std::vector<double> Polynomial::double_coefficients() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.convert_to<double>());
  return out;
}

double Polynomial::evaluate(double x) const {
  return poly_eval(double_coefficients(), x);
}

double poly_eval(const Polynomial& p, double x) { return p.evaluate(x); }

double poly_eval(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

EvenPolynomial::EvenPolynomial(Polynomial p) : poly_(std::move(p)) {
  for (int k = 1; k <= poly_.degree(); k += 2) {
    if (poly_.coefficient(k) != 0) {
      throw DomainError("polynomial is not even: nonzero coefficient at power " +
                        std::to_string(k));
    }
  }
}

std::string format_coefficient_table(const Polynomial& p) {
  std::ostringstream os;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p.coefficient(k);
    os << k << ' ' << numerator(c) << ' ' << denominator(c) << '\n';
  }
  if (p.is_zero()) os << "0 0 1\n";
  return os.str();
}

}  // namespace snspec
