#pragma once

#include "snspec/material.hpp"
#include "snspec/quadrature.hpp"

namespace snspec {

/**
 * @brief Harmonically trapped particle state.
 *
 * alpha = 2 sigma sqrt(M omega0 / hbar) compares the nuclear localization
 * length to the ground-state width: alpha << 1 is the wide-wavefunction
 * regime, alpha >> 1 the narrow one. It is always derived from (M, omega0,
 * sigma), never stored independently.
 */
struct TrapState {
  double mass = 0.0;    // total particle mass, kg
  double omega0 = 0.0;  // trap angular frequency, rad/s
  double sigma = 0.0;   // nuclear localization length, m
  double alpha = 0.0;   // derived
};

TrapState make_trap_state(double mass_kg, double omega0, double sigma_m);

/// Self-gravity kernel K(zeta) = erf(sqrt(2) zeta)/(2 zeta) - sqrt(2/pi).
/// The removable singularity at zeta = 0 is handled by a series branch; K is
/// continuous, K(0) = 0 and K -> -sqrt(2/pi) as zeta -> infinity.
double kernel_k(double zeta);

struct FTildeResult {
  double value = 0.0;           // dimensionless
  double error_estimate = 0.0;  // scaled like value
  double zeta_cutoff = 0.0;     // integration domain truncation bound
  int intervals = 0;
};

/**
 * n-dependent part of the level-shift function:
 *
 *   f~(n, alpha) = alpha^3 sqrt(2/pi) Int_0^inf exp(-alpha^2 zeta^2 / 2)
 *                  P_n(alpha zeta) K(zeta) dzeta
 *
 * The n-independent additive constant of the full shift is deliberately not
 * computed; it cancels from every transition observable. f~ is strictly
 * negative and tends to -(4/3) sqrt(2/pi) (n + 1/2) for large alpha.
 */
FTildeResult f_tilde(int n, double alpha, const QuadratureOptions& opts = {});

/// Splitting coefficient g_{n1 n2}(alpha) = (3/8) sqrt(2 pi) (f~_{n1} - f~_{n2})
/// for n2 > n1. Tends to n2 - n1 in the narrow limit and to 0 in the wide one.
double g_coefficient(int n1, int n2, double alpha, const QuadratureOptions& opts = {});

/// Transition-shift scale sqrt(2/pi) G m / (3 omega0 sigma^3) with m the
/// atomic mass [kg] and sigma the localization length [m]; result in rad/s.
double delta_omega_sn(double atomic_mass_kg, double sigma_m, double omega0,
                      double gravitational_constant);
double delta_omega_sn(const Material& material, double omega0);

/// The product of the splitting prefactor (3/8) sqrt(2 pi) with the
/// narrow-limit slope (4/3) sqrt(2/pi) of f~, simplified algebraically.
/// Equals exactly 1: in the narrow limit g_{n,n+1} -> 1.
double narrow_limit_gain();

struct ShiftResult {
  int n1 = 0;
  int n2 = 0;
  double f_tilde_n1 = 0.0;
  double f_tilde_n2 = 0.0;
  double g = 0.0;                          // dimensionless
  double delta_omega = 0.0;                // rad/s
  double quadrature_error_estimate = 0.0;  // dimensionless, on g
};

/// Frequency shift of the n1 -> n2 transition: delta_omega = dw_SN * g.
/// trap.sigma must equal the material's sigma (ConsistencyError otherwise).
ShiftResult transition_shift(const Material& material, const TrapState& trap,
                             int n1, int n2, const QuadratureOptions& opts = {});

/// Narrow-regime n-dependent level shift divided by hbar: -dw_SN (n + 1/2),
/// in the sign convention where the difference between levels n and n+1 is
/// exactly delta_omega_sn. The n-independent contribution (unknown overall
/// constant) is excluded.
double narrow_level_shift(const Material& material, double omega0, int n);

}  // namespace snspec
