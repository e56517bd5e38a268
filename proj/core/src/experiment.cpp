#include "snspec/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "snspec/constants.hpp"
#include "snspec/errors.hpp"
#include "snspec/spectrum.hpp"

namespace snspec {

ParticleGeometry ParticleGeometry::sphere(double radius_m) {
  if (!(radius_m > 0.0)) throw DomainError("sphere radius must be positive");
  ParticleGeometry g;
  g.shape = Shape::sphere;
  g.radius = radius_m;
  g.volume = 4.0 / 3.0 * std::numbers::pi * radius_m * radius_m * radius_m;
  return g;
}

ParticleGeometry ParticleGeometry::disc(double diameter_m, double thickness_m) {
  if (!(diameter_m > 0.0) || !(thickness_m > 0.0)) {
    throw DomainError("disc dimensions must be positive");
  }
  ParticleGeometry g;
  g.shape = Shape::disc;
  g.diameter = diameter_m;
  g.thickness = thickness_m;
  g.volume = std::numbers::pi / 4.0 * thickness_m * diameter_m * diameter_m;
  return g;
}

double alpha_of(double mass_kg, double omega0, double sigma_m) {
  if (!(mass_kg > 0.0) || !(omega0 > 0.0) || !(sigma_m > 0.0)) {
    throw DomainError("alpha_of: all inputs must be positive");
  }
  return 2.0 * sigma_m * std::sqrt(mass_kg * omega0 / consts::hbar);
}

double mass_for_alpha(double alpha, double omega0, double sigma_m) {
  if (!(alpha > 0.0) || !(omega0 > 0.0) || !(sigma_m > 0.0)) {
    throw DomainError("mass_for_alpha: all inputs must be positive");
  }
  return consts::hbar * alpha * alpha / (4.0 * sigma_m * sigma_m * omega0);
}

double sphere_diameter(double mass_kg, double density_kg_m3) {
  if (!(mass_kg > 0.0) || !(density_kg_m3 > 0.0)) {
    throw DomainError("sphere_diameter: inputs must be positive");
  }
  return 2.0 * std::cbrt(3.0 * mass_kg / (4.0 * std::numbers::pi * density_kg_m3));
}

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::wide: return "wide";
    case Regime::intermediate: return "intermediate";
    case Regime::narrow: return "narrow";
  }
  return "?";
}

namespace {

Regime classify(const std::vector<SpectralLine>& lines) {
  double max_abs = 0.0;
  double lo = lines.front().g;
  double hi = lines.front().g;
  double sum = 0.0;
  for (const auto& l : lines) {
    max_abs = std::max(max_abs, std::abs(l.g));
    lo = std::min(lo, l.g);
    hi = std::max(hi, l.g);
    sum += l.g;
  }
  if (max_abs < kWideMaxG) return Regime::wide;
  const double mean = sum / static_cast<double>(lines.size());
  if (hi - lo < kNarrowSpreadFraction * std::abs(mean)) return Regime::narrow;
  return Regime::intermediate;
}

}  // namespace

SpectrumScan scan_spectrum(const Material& material, double omega0,
                           double mass_min_kg, double mass_max_kg, int points,
                           int n_max, const QuadratureOptions& opts) {
  if (!(mass_min_kg > 0.0) || !(mass_max_kg > mass_min_kg)) {
    throw DomainError("scan_spectrum: mass range must be positive and increasing");
  }
  if (points < 2) throw DomainError("scan_spectrum: need at least 2 grid points");
  if (n_max < 1) throw DomainError("scan_spectrum: n_max must be at least 1");
  if (!(omega0 > 0.0)) throw DomainError("scan_spectrum: omega0 must be positive");

  const double dwsn = delta_omega_sn(material, omega0);
  const double log_lo = std::log(mass_min_kg);
  const double log_hi = std::log(mass_max_kg);

  SpectrumScan scan;
  scan.material = material;
  scan.omega0 = omega0;
  scan.n_max = n_max;
  scan.points.resize(static_cast<std::size_t>(points));

  for (int i = 0; i < points; ++i) {
    ScanPoint& pt = scan.points[static_cast<std::size_t>(i)];
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    pt.mass = std::exp(log_lo + t * (log_hi - log_lo));
    pt.alpha = alpha_of(pt.mass, omega0, material.sigma);
    try {
      std::vector<double> f(static_cast<std::size_t>(n_max) + 1);
      for (int n = 0; n <= n_max; ++n) {
        f[static_cast<std::size_t>(n)] = f_tilde(n, pt.alpha, opts).value;
      }
      pt.lines.reserve(static_cast<std::size_t>(n_max));
      for (int n = 0; n < n_max; ++n) {
        SpectralLine line;
        line.n1 = n;
        line.n2 = n + 1;
        line.g = 0.375 * consts::sqrt_two_pi *
                 (f[static_cast<std::size_t>(n)] - f[static_cast<std::size_t>(n) + 1]);
        line.delta_omega = dwsn * line.g;
        line.line_frequency = omega0 + line.delta_omega;
        pt.lines.push_back(line);
      }
      pt.regime = classify(pt.lines);
      pt.ok = true;
    } catch (const QuadratureError& e) {
      pt.ok = false;
      pt.error = e.what();
      pt.lines.clear();
    }
  }
  return scan;
}

RayleighEstimate rayleigh_rate(double temperature_K, const ParticleGeometry& geometry) {
  if (!(temperature_K > 0.0)) {
    throw DomainError("rayleigh_rate: temperature must be positive");
  }
  RayleighEstimate r;
  r.temperature = temperature_K;
  r.volume = geometry.volume;
  r.chi = 3.0 * geometry.volume;
  r.lambda_T = consts::h * consts::c / (consts::k_B * temperature_K);
  const double lambda7 = std::pow(r.lambda_T, 7);
  const double pi5 = std::pow(std::numbers::pi, 5);
  r.gamma_R = 30720.0 * pi5 * consts::zeta7 * consts::c * r.chi * r.chi / lambda7;
  r.gamma_R_order = 1e7 * consts::c * r.chi * r.chi / lambda7;
  return r;
}

}  // namespace snspec
