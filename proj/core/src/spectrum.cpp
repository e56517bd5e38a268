#include "snspec/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "snspec/constants.hpp"
#include "snspec/errors.hpp"
#include "snspec/hermite.hpp"

namespace snspec {

namespace {

// Below the switch point the closed form loses precision to cancellation;
// a 6-term series keeps the kernel smooth across the boundary (mismatch is
// far below 1e-13 there).
constexpr double kKernelSwitch = 1e-3;

// Truncate the f~ integrand once the Gaussian envelope times a coefficient
// bound of |P_n| drops below this times the polynomial scale.
constexpr double kTailThreshold = 1e-22;

double kernel_series(double zeta) {
  // K = sqrt(2/pi) * sum_{k>=1} (-1)^k (2 zeta^2)^k / (k! (2k+1))
  const double t = 2.0 * zeta * zeta;
  double sum = 0.0;
  double term = 1.0;  // (2 zeta^2)^k / k!
  static constexpr int kTerms = 6;
  for (int k = 1; k <= kTerms; ++k) {
    term *= t / k;
    const double contrib = term / (2 * k + 1);
    sum += (k % 2 == 1) ? -contrib : contrib;
  }
  return consts::sqrt_2_over_pi * sum;
}

// Smallest z beyond which exp(-z^2/2) * sum_k |c_k| z^k is negligible
// relative to the polynomial's own scale.
double envelope_cutoff(const std::vector<double>& coeffs) {
  double scale = 0.0;
  for (double c : coeffs) scale += std::abs(c);
  const double threshold = kTailThreshold * std::max(1.0, scale);
  double z = 4.0;
  while (z < 400.0) {
    double bound = 0.0;
    double zp = 1.0;
    for (double c : coeffs) {
      bound += std::abs(c) * zp;
      zp *= z;
    }
    if (std::exp(-0.5 * z * z) * bound < threshold) return z;
    z += 1.0;
  }
  return z;
}

}  // namespace

double kernel_k(double zeta) {
  if (!(zeta >= 0.0)) throw DomainError("kernel_k: zeta must be non-negative");
  if (zeta < kKernelSwitch) return kernel_series(zeta);
  return std::erf(std::numbers::sqrt2 * zeta) / (2.0 * zeta) - consts::sqrt_2_over_pi;
}

TrapState make_trap_state(double mass_kg, double omega0, double sigma_m) {
  if (!(mass_kg > 0.0)) throw DomainError("trap state: mass must be positive");
  if (!(omega0 > 0.0)) throw DomainError("trap state: omega0 must be positive");
  if (!(sigma_m > 0.0)) throw DomainError("trap state: sigma must be positive");
  TrapState t;
  t.mass = mass_kg;
  t.omega0 = omega0;
  t.sigma = sigma_m;
  t.alpha = 2.0 * sigma_m * std::sqrt(mass_kg * omega0 / consts::hbar);
  return t;
}

FTildeResult f_tilde(int n, double alpha, const QuadratureOptions& opts) {
  if (n < 0) throw DomainError("f_tilde: n must be non-negative");
  if (!(alpha > 0.0)) throw DomainError("f_tilde: alpha must be positive");

  const PPolyTables& pn = p_poly_cached(n);
  const std::vector<double>& c = pn.coefficients;

  const double zeta_cutoff = envelope_cutoff(c) / alpha;
  auto integrand = [&](double zeta) {
    const double z = alpha * zeta;
    return std::exp(-0.5 * z * z) * poly_eval(c, z) * kernel_k(zeta);
  };

  const double prefactor = alpha * alpha * alpha * consts::sqrt_2_over_pi;
  QuadratureResult q;
  try {
    q = integrate_adaptive(integrand, 0.0, zeta_cutoff, opts);
  } catch (const QuadratureError& e) {
    std::ostringstream os;
    os << "f_tilde(n=" << n << ", alpha=" << alpha << "): " << e.what();
    throw QuadratureError(os.str(), prefactor * e.partial_value(),
                          prefactor * e.error_estimate());
  }

  FTildeResult out;
  out.value = prefactor * q.value;
  out.error_estimate = prefactor * q.error_estimate;
  out.zeta_cutoff = zeta_cutoff;
  out.intervals = q.intervals;
  return out;
}

double g_coefficient(int n1, int n2, double alpha, const QuadratureOptions& opts) {
  if (n1 < 0 || n2 <= n1) {
    throw DomainError("g_coefficient: requires n2 > n1 >= 0");
  }
  const double f1 = f_tilde(n1, alpha, opts).value;
  const double f2 = f_tilde(n2, alpha, opts).value;
  return 0.375 * consts::sqrt_two_pi * (f1 - f2);
}

double delta_omega_sn(double atomic_mass_kg, double sigma_m, double omega0,
                      double gravitational_constant) {
  if (!(omega0 > 0.0)) throw DomainError("delta_omega_sn: omega0 must be positive");
  if (!(atomic_mass_kg > 0.0) || !(sigma_m > 0.0)) {
    throw DomainError("delta_omega_sn: atomic mass and sigma must be positive");
  }
  return consts::sqrt_2_over_pi * gravitational_constant * atomic_mass_kg /
         (3.0 * omega0 * sigma_m * sigma_m * sigma_m);
}

double delta_omega_sn(const Material& material, double omega0) {
  return delta_omega_sn(material.atomic_mass, material.sigma, omega0, consts::G);
}

double narrow_limit_gain() {
  // (3/8) sqrt(2 pi) * (4/3) sqrt(2/pi): the radicals multiply to exactly 2
  // and the rational factors to exactly 1/2.
  return ((3.0 * 4.0) / (8.0 * 3.0)) * 2.0;
}

ShiftResult transition_shift(const Material& material, const TrapState& trap,
                             int n1, int n2, const QuadratureOptions& opts) {
  if (n1 < 0 || n2 <= n1) {
    throw DomainError("transition_shift: requires n2 > n1 >= 0");
  }
  if (std::abs(trap.sigma - material.sigma) > 1e-12 * material.sigma) {
    std::ostringstream os;
    os << "transition_shift: trap sigma " << trap.sigma
       << " does not match material '" << material.name << "' sigma "
       << material.sigma;
    throw ConsistencyError(os.str());
  }

  const FTildeResult f1 = f_tilde(n1, trap.alpha, opts);
  const FTildeResult f2 = f_tilde(n2, trap.alpha, opts);
  const double prefactor = 0.375 * consts::sqrt_two_pi;

  ShiftResult out;
  out.n1 = n1;
  out.n2 = n2;
  out.f_tilde_n1 = f1.value;
  out.f_tilde_n2 = f2.value;
  out.g = prefactor * (f1.value - f2.value);
  out.delta_omega = delta_omega_sn(material, trap.omega0) * out.g;
  out.quadrature_error_estimate =
      prefactor * (f1.error_estimate + f2.error_estimate);
  return out;
}

double narrow_level_shift(const Material& material, double omega0, int n) {
  if (n < 0) throw DomainError("narrow_level_shift: n must be non-negative");
  return -delta_omega_sn(material, omega0) * (n + 0.5);
}

}  // namespace snspec
