#pragma once

#include <cmath>
#include <concepts>
#include <queue>
#include <vector>

#include "snspec/errors.hpp"

namespace snspec {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-16;
  int max_intervals = 2000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
std::pair<double, double> gk15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;

  for (int j = 0; j < 7; ++j) {
    const double dx = half * kGK15Nodes[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[j] * sum;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::abs(kronrod - gauss)};
}

struct Interval {
  double a, b, value, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

}  // namespace detail

/**
 * Globally adaptive integration over [a, b]: the interval with the largest
 * Gauss-Kronrod error estimate is bisected until the summed estimate meets
 * max(rel_tol*|integral|, abs_tol) or the interval budget runs out, in which
 * case a QuadratureError carrying the partial result is thrown.
 */
template <typename F>
  requires std::invocable<F&, double>
QuadratureResult integrate_adaptive(F&& f, double a, double b,
                                    const QuadratureOptions& opts = {}) {
  if (!(a <= b)) throw DomainError("integrate_adaptive: requires a <= b");
  if (a == b) return {0.0, 0.0, 0};

  std::priority_queue<detail::Interval> queue;
  auto [v0, e0] = detail::gk15(f, a, b);
  queue.push({a, b, v0, e0});
  double total_value = v0;
  double total_error = e0;
  int intervals = 1;

  while (total_error > std::max(opts.rel_tol * std::abs(total_value), opts.abs_tol)) {
    if (intervals >= opts.max_intervals) {
      throw QuadratureError(
          "integrate_adaptive: no convergence within " +
              std::to_string(opts.max_intervals) + " intervals",
          total_value, total_error);
    }
    detail::Interval worst = queue.top();
    queue.pop();
    total_value -= worst.value;
    total_error -= worst.error;

    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval no longer splittable in double precision; accept it.
      total_value += worst.value;
      total_error += worst.error;
      break;
    }
    auto [vl, el] = detail::gk15(f, worst.a, mid);
    auto [vr, er] = detail::gk15(f, mid, worst.b);
    queue.push({worst.a, mid, vl, el});
    queue.push({mid, worst.b, vr, er});
    total_value += vl + vr;
    total_error += el + er;
    ++intervals;
  }

  return {total_value, total_error, intervals};
}

}  // namespace snspec
