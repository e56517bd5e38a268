#pragma once

#include <numbers>

namespace snspec::consts {

// CODATA 2018 / SI (2019) defining constants, strict SI units.

/// Newtonian gravitational constant [m^3 kg^-1 s^-2].
inline constexpr double G = 6.67430e-11;

/// Planck constant [J s] (exact since the 2019 SI redefinition).
inline constexpr double h = 6.62607015e-34;

/// Reduced Planck constant [J s], derived as h / 2pi so that h = 2*pi*hbar
/// holds to machine precision.
inline constexpr double hbar = h / (2.0 * std::numbers::pi);

/// Speed of light in vacuum [m s^-1] (exact).
inline constexpr double c = 2.99792458e8;

/// Boltzmann constant [J K^-1] (exact).
inline constexpr double k_B = 1.380649e-23;

/// Atomic mass unit [kg].
inline constexpr double amu = 1.66053906660e-27;

/// Riemann zeta(7), used by the blackbody scattering-rate integral.
inline constexpr double zeta7 = 1.0083492773819228;

/// sqrt(2/pi), assembled from correctly rounded constants.
inline constexpr double sqrt_2_over_pi =
    std::numbers::sqrt2 * std::numbers::inv_sqrtpi;

/// sqrt(2*pi).
inline constexpr double sqrt_two_pi = std::numbers::sqrt2 / std::numbers::inv_sqrtpi;

/// Bundle of the fundamental constants, for callers that want a value object.
struct PhysicalConstants {
  double G = consts::G;        // m^3 kg^-1 s^-2
  double hbar = consts::hbar;  // J s
  double h = consts::h;        // J s
  double c = consts::c;        // m s^-1
  double k_B = consts::k_B;    // J K^-1
  double amu = consts::amu;    // kg
};

inline constexpr PhysicalConstants codata() { return PhysicalConstants{}; }

}  // namespace snspec::consts
