#include "snspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "snspec/constants.hpp"
#include "snspec/errors.hpp"
#include "snspec/hermite.hpp"
#include "snspec/spectrum.hpp"

namespace snspec::oracle {

namespace {

// Gauss-Legendre rules on [-1, 1], positive half; nodes are symmetric.
constexpr double kGL20Nodes[10] = {
    7.65265211334973383e-02, 2.27785851141645096e-01, 3.73706088715419549e-01,
    5.10867001950827126e-01, 6.36053680726515025e-01, 7.46331906460150796e-01,
    8.39116971822218782e-01, 9.12234428251325835e-01, 9.63971927277913809e-01,
    9.93128599185094885e-01};
constexpr double kGL20Weights[10] = {
    1.52753387130725782e-01, 1.49172986472603658e-01, 1.42096109318381875e-01,
    1.31688638449176526e-01, 1.18194531961518245e-01, 1.01930119817240261e-01,
    8.32767415767046715e-02, 6.26720483341094425e-02, 4.06014298003862170e-02,
    1.76140071391532732e-02};

constexpr double kGL16Nodes[8] = {
    9.50125098376374544e-02, 2.81603550779258915e-01, 4.58016777657227370e-01,
    6.17876244402643771e-01, 7.55404408355002999e-01, 8.65631202387831755e-01,
    9.44575023073232600e-01, 9.89400934991649939e-01};
constexpr double kGL16Weights[8] = {
    1.89450610455068585e-01, 1.82603415044923612e-01, 1.69156519395002619e-01,
    1.49595988816576764e-01, 1.24628971255534030e-01, 9.51585116824925914e-02,
    6.22535239386477063e-02, 2.71524594117540374e-02};

// Composite fixed-order rule: deliberately not the adaptive Gauss-Kronrod
// scheme of the main engine.
template <int Order, typename F>
double composite_gl(F&& f, double a, double b, int panels) {
  static_assert(Order == 16 || Order == 20);
  const double* nodes = (Order == 16) ? kGL16Nodes : kGL20Nodes;
  const double* weights = (Order == 16) ? kGL16Weights : kGL20Weights;
  const int half = Order / 2;

  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double center = a + (p + 0.5) * width;
    const double scale = 0.5 * width;
    double acc = 0.0;
    for (int j = 0; j < half; ++j) {
      const double dx = scale * nodes[j];
      acc += weights[j] * (f(center - dx) + f(center + dx));
    }
    total += scale * acc;
  }
  return total;
}

double hermite_value(int n, double x) {
  if (n == 0) return 1.0;
  double hm = 1.0;
  double h = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double hn = 2.0 * x * h - 2.0 * k * hm;
    hm = h;
    h = hn;
  }
  return h;
}

// Its own kernel evaluation, separate from the engine's series/branch code.
double oracle_kernel(double zeta) {
  if (zeta < 1e-6) {
    return -consts::sqrt_2_over_pi * (2.0 / 3.0) * zeta * zeta;
  }
  return std::erf(std::numbers::sqrt2 * zeta) / (2.0 * zeta) - consts::sqrt_2_over_pi;
}

}  // namespace

double relative_discrepancy(double analytic, double oracle) {
  return std::abs(analytic - oracle) / (1.0 + std::abs(oracle));
}

double p_eval_quadrature(int n, double z) {
  if (n < 0) throw DomainError("p_eval_quadrature: n must be non-negative");
  if (n > 10) {
    throw CapabilityError("p_eval_quadrature: n = " + std::to_string(n) +
                          " exceeds the cost guard n <= 10");
  }
  if (!std::isfinite(z)) throw DomainError("p_eval_quadrature: z must be finite");

  // Integrand has Gaussian factors centered at +-z/2 with width 1/2; a
  // [-L, L] window with 10 widths of margin puts the tails below 1e-16.
  const double L = 0.5 * std::abs(z) + 10.0;
  const int panels = static_cast<int>(std::ceil(2.0 * L / 0.5));

  auto integrand = [n, z](double xi) {
    const double hn = hermite_value(n, xi);
    const double hsq = hn * hn;
    const double hm = hermite_value(n, xi - z);
    const double hp = hermite_value(n, xi + z);
    // exp(-z^2/2) prefactor folded into the exponents to keep them bounded.
    const double e1 = std::exp(-2.0 * xi * xi + 2.0 * z * xi - 0.5 * z * z);
    const double e2 = std::exp(-2.0 * xi * xi - 2.0 * z * xi - 0.5 * z * z);
    return hsq * (e1 * hm * hm + e2 * hp * hp);
  };

  double norm = 1.0;  // 2^n n!
  for (int k = 1; k <= n; ++k) norm *= 2.0 * k;
  const double integral = composite_gl<20>(integrand, -L, L, panels);
  return integral / (consts::sqrt_two_pi * norm * norm);
}

double f_diff_bruteforce(int n1, int n2, double alpha) {
  if (n1 < 0 || n2 < 0) throw DomainError("f_diff_bruteforce: levels must be >= 0");
  if (n1 > 6 || n2 > 6) {
    throw CapabilityError("f_diff_bruteforce: cost guard requires n <= 6");
  }
  if (!(alpha > 0.0)) throw DomainError("f_diff_bruteforce: alpha must be positive");
  if (n1 == n2) return 0.0;

  const int n_hi = std::max(n1, n2);
  const double z_cut = 12.0 + 2.0 * n_hi;
  const double zeta_cut = z_cut / alpha;

  auto integrand = [&](double zeta) {
    const double z = alpha * zeta;
    const double dp = p_eval_quadrature(n1, z) - p_eval_quadrature(n2, z);
    return std::exp(-0.5 * z * z) * dp * oracle_kernel(zeta);
  };

  const double prefactor =
      alpha * alpha * alpha * consts::sqrt_2_over_pi;

  // Panel doubling until two successive composite estimates agree.
  const double tol = 1e-8;
  double previous = 0.0;
  bool have_previous = false;
  for (int panels = 32; panels <= 1024; panels *= 2) {
    const double current = composite_gl<16>(integrand, 0.0, zeta_cut, panels);
    if (have_previous &&
        std::abs(current - previous) <= tol * std::max(std::abs(current), 1e-30)) {
      return prefactor * current;
    }
    previous = current;
    have_previous = true;
  }
  throw QuadratureError("f_diff_bruteforce: outer quadrature did not settle",
                        prefactor * previous, 0.0);
}

std::vector<OracleReport> narrow_limit_check(int n_max, double alpha_large) {
  if (!(alpha_large >= 20.0)) {
    throw DomainError("narrow_limit_check: requires alpha >= 20");
  }
  std::vector<OracleReport> out;
  for (int n = 0; n < n_max; ++n) {
    OracleReport r;
    std::ostringstream q;
    q << "narrow_limit_g(" << n << "," << n + 1 << ")@alpha=" << alpha_large;
    r.quantity = q.str();
    r.analytic_value = g_coefficient(n, n + 1, alpha_large);
    r.oracle_value = narrow_limit_gain();  // the exact limit, = 1
    r.relative_discrepancy = relative_discrepancy(r.analytic_value, r.oracle_value);
    r.settings = "limit=narrow";
    out.push_back(std::move(r));
  }
  return out;
}

SuiteResult run_verification_suite() {
  SuiteResult suite;

  // P_n closed form vs. direct quadrature of the defining integral.
  const double z_values[] = {0.0, 0.5, 1.0, 2.0, 5.0, 10.0};
  for (int n = 0; n <= 10; ++n) {
    const PPolyTables& pn = p_poly_cached(n);
    for (double z : z_values) {
      OracleReport r;
      std::ostringstream q;
      q << "P_" << n << "(" << z << ")";
      r.quantity = q.str();
      r.analytic_value = poly_eval(pn.coefficients, z);
      r.oracle_value = p_eval_quadrature(n, z);
      r.relative_discrepancy = relative_discrepancy(r.analytic_value, r.oracle_value);
      r.settings = "gl20,panel=0.5,margin=10";
      suite.reports.push_back(std::move(r));
      suite.thresholds.push_back(kPnThreshold);
    }
  }

  // Adjacent f~ differences vs. nested double quadrature.
  const double alphas[] = {1.0, 3.0, 5.0, 10.0};
  for (double alpha : alphas) {
    for (int n = 0; n < 6; ++n) {
      OracleReport r;
      std::ostringstream q;
      q << "f_diff(" << n << "," << n + 1 << ")@alpha=" << alpha;
      r.quantity = q.str();
      r.analytic_value = f_tilde(n, alpha).value - f_tilde(n + 1, alpha).value;
      r.oracle_value = f_diff_bruteforce(n, n + 1, alpha);
      r.relative_discrepancy = relative_discrepancy(r.analytic_value, r.oracle_value);
      r.settings = "outer=gl16,doubling,tol=1e-8;inner=gl20";
      suite.reports.push_back(std::move(r));
      suite.thresholds.push_back(kFDiffThreshold);
    }
  }

  for (auto& r : narrow_limit_check(3, 50.0)) {
    suite.reports.push_back(std::move(r));
    suite.thresholds.push_back(kNarrowLimitThreshold);
  }

  suite.all_passed = true;
  for (std::size_t i = 0; i < suite.reports.size(); ++i) {
    if (!(suite.reports[i].relative_discrepancy < suite.thresholds[i])) {
      suite.all_passed = false;
      break;
    }
  }
  return suite;
}

}  // namespace snspec::oracle
