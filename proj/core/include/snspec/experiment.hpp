#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "snspec/material.hpp"
#include "snspec/quadrature.hpp"

namespace snspec {

/// Trapped-particle shape; sub-wavelength scattering needs only the volume.
struct ParticleGeometry {
  enum class Shape { sphere, disc };

  Shape shape = Shape::sphere;
  double radius = 0.0;     // m, sphere only
  double diameter = 0.0;   // m, disc only
  double thickness = 0.0;  // m, disc only
  double volume = 0.0;     // m^3, derived

  static ParticleGeometry sphere(double radius_m);
  static ParticleGeometry disc(double diameter_m, double thickness_m);
};

/// alpha = 2 sigma sqrt(M omega0 / hbar).
double alpha_of(double mass_kg, double omega0, double sigma_m);

/// Exact inverse of alpha_of: M = hbar alpha^2 / (4 sigma^2 omega0).
double mass_for_alpha(double alpha, double omega0, double sigma_m);

/// Diameter of a homogeneous sphere of the given mass and density.
double sphere_diameter(double mass_kg, double density_kg_m3);

enum class Regime { wide, intermediate, narrow };
std::string_view regime_name(Regime r);

/// Regime labels: "wide" when every |g| is below this ...
inline constexpr double kWideMaxG = 0.05;
/// ... and "narrow" when the spread of g across n is below this fraction of
/// the mean. In between is the intermediate regime.
inline constexpr double kNarrowSpreadFraction = 0.05;

struct SpectralLine {
  int n1 = 0;
  int n2 = 0;  // = n1 + 1
  double g = 0.0;
  double delta_omega = 0.0;    // rad/s
  double line_frequency = 0.0; // omega0 + delta_omega, rad/s
};

struct ScanPoint {
  double mass = 0.0;   // kg
  double alpha = 0.0;
  bool ok = false;
  std::string error;   // set when !ok
  Regime regime = Regime::intermediate;
  std::vector<SpectralLine> lines;  // n_max lines when ok
};

struct SpectrumScan {
  Material material;
  double omega0 = 0.0;
  int n_max = 0;
  std::vector<ScanPoint> points;  // strictly increasing mass
};

/**
 * Adjacent-transition spectrum over a log-spaced mass grid. Each point
 * carries all (n, n+1) lines for n < n_max and a regime label. Quadrature
 * failures flag the affected point without aborting the scan. Points are
 * independent, keyed by grid index, so the result does not depend on
 * evaluation order.
 */
SpectrumScan scan_spectrum(const Material& material, double omega0,
                           double mass_min_kg, double mass_max_kg, int points,
                           int n_max, const QuadratureOptions& opts = {});

struct RayleighEstimate {
  double temperature = 0.0;    // K
  double volume = 0.0;         // m^3
  double chi = 0.0;            // polarizability volume 3V, m^3
  double lambda_T = 0.0;       // thermal wavelength h c / (k_B T), m
  double gamma_R = 0.0;        // scattering rate, 1/s (exact prefactor)
  double gamma_R_order = 0.0;  // rounded-prefactor (1e7) variant, 1/s
};

/// Total blackbody Rayleigh scattering rate of a sub-wavelength particle:
/// Gamma_R = 30720 pi^5 zeta(7) c chi^2 / lambda_T^7 with chi = 3V.
RayleighEstimate rayleigh_rate(double temperature_K, const ParticleGeometry& geometry);

}  // namespace snspec
