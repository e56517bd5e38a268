#pragma once

#include <vector>

#include "snspec/polynomial.hpp"

namespace snspec {

/// Physicists' Hermite polynomial H_n, built from the recurrence
/// H_{n+1}(x) = 2x H_n(x) - 2n H_{n-1}(x) with H_0 = 1, H_1 = 2x.
Polynomial hermite(int n);

/**
 * @brief Overlap polynomial P_n in closed form.
 *
 * P_n(z) is the Gaussian overlap integral of two harmonic-oscillator
 * probability densities displaced by z, reduced to a polynomial of degree 4n:
 * after completing the square, the integral over the internal coordinate
 * becomes a sum of central Gaussian moments (variance 1/4) of
 * H_n(u + z/2)^2 H_n(u - z/2)^2, and the exp(z^2/2) factor from the square
 * completion cancels the exp(-z^2/2) prefactor exactly. Every intermediate
 * is an exact integer or rational; nothing is rounded until evaluation.
 *
 * P_n is even, P_n(0) > 0, and for all n:
 *   sum_k p_{2k} (2k-1)!! = 1,   sum_k p_{2k} (2k+1)!! = 2n + 1,
 * which the test suite checks exactly.
 */
EvenPolynomial p_poly(int n);

/// Constructed P_n together with its double-converted coefficients,
/// ready for hot evaluation loops.
struct PPolyTables {
  EvenPolynomial exact;
  std::vector<double> coefficients;  // lowest power first
};

/// Thread-safe memoized access to P_n. References stay valid for the
/// lifetime of the process.
const PPolyTables& p_poly_cached(int n);

/// Construction-cost ceiling (default 14). Constructing beyond it is allowed
/// but logs a warning: cost grows super-proportionally with n.
int p_poly_ceiling();
void set_p_poly_ceiling(int n);

}  // namespace snspec
