#pragma once

#include <string>
#include <vector>

namespace snspec::oracle {

/**
 * Brute-force verification paths for the analytic machinery. Everything here
 * deliberately avoids the closed-form polynomial algebra and the adaptive
 * Gauss-Kronrod engine: values are recomputed from the defining integrals
 * with fixed-order composite Gauss-Legendre rules, so that agreement with
 * the main path is evidence rather than tautology.
 */

struct OracleReport {
  std::string quantity;
  double analytic_value = 0.0;
  double oracle_value = 0.0;
  double relative_discrepancy = 0.0;  // |analytic - oracle| / (1 + |oracle|)
  std::string settings;
};

double relative_discrepancy(double analytic, double oracle);

/// P_n(z) by direct numerical integration of its defining Gaussian overlap
/// integral; no polynomial identity is used. Guarded at n <= 10 for cost.
double p_eval_quadrature(int n, double z);

/// f~(n1) - f~(n2) by fully nested double quadrature: the outer integral
/// over zeta evaluates P_n via p_eval_quadrature at every node. The
/// n-independent constant cancels identically in the difference.
/// Guarded at n <= 6; outer tolerance 1e-8.
double f_diff_bruteforce(int n1, int n2, double alpha);

/// Narrow-limit reports: compares g(n, n+1, alpha_large) from the main
/// engine against its analytic limit 1 for n < n_max. Requires alpha >= 20.
std::vector<OracleReport> narrow_limit_check(int n_max, double alpha_large);

/// Per-quantity acceptance thresholds on relative_discrepancy.
inline constexpr double kPnThreshold = 1e-9;
inline constexpr double kFDiffThreshold = 1e-6;
inline constexpr double kNarrowLimitThreshold = 0.05;

struct SuiteResult {
  std::vector<OracleReport> reports;
  std::vector<double> thresholds;  // parallel to reports
  bool all_passed = false;
};

/// The default verification suite:
///  - P_n values for n <= 10, z in {0, 0.5, 1, 2, 5, 10}   (threshold 1e-9)
///  - adjacent f~ differences, n <= 6, alpha in {1,3,5,10} (threshold 1e-6)
///  - narrow-limit checks at alpha = 50, n < 3             (threshold 0.05)
SuiteResult run_verification_suite();

}  // namespace snspec::oracle
