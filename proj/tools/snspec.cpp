// snspec: self-gravity spectral corrections for harmonically trapped
// microparticles. Subcommands cover the material table, single transition
// shifts, per-mass line spectra, coefficient/mass scans, experiment sizing,
// blackbody Rayleigh scattering estimates, and the brute-force verification
// suite.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "snspec/constants.hpp"
#include "snspec/errors.hpp"
#include "snspec/experiment.hpp"
#include "snspec/hermite.hpp"
#include "snspec/material.hpp"
#include "snspec/oracle.hpp"
#include "snspec/records.hpp"
#include "snspec/spectrum.hpp"
#include "snspec/units.hpp"

namespace {

using namespace snspec;
namespace u = snspec::units;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitDataFile = 3;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  OutputFormat format = OutputFormat::csv;
  std::string output_path;           // empty = stdout
  std::string materials_path;        // empty = env var or built-ins only
  QuadratureOptions quadrature;      // rel_tol overridable
};

MaterialDatabase load_database(const RunConfig& cfg) {
  MaterialDatabase db;
  std::string path = cfg.materials_path;
  if (path.empty()) {
    if (const char* env = std::getenv("SNSPEC_MATERIALS")) path = env;
  }
  if (!path.empty()) db.load_file(path);
  return db;
}

struct OutputTarget {
  explicit OutputTarget(const RunConfig& cfg) {
    if (!cfg.output_path.empty()) {
      file.open(cfg.output_path);
      if (!file) throw DataFileError("cannot open output file '" + cfg.output_path + "'");
    }
  }
  std::ostream& stream() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

double parse_positive(const std::string& text, u::Dimension dim, const char* flag) {
  double v;
  try {
    v = u::parse_si(text, dim);
  } catch (const DomainError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw UsageError(std::string(flag) + ": value must be positive and finite");
  }
  return v;
}

// ---------------------------------------------------------------------------
// subcommand: materials

int cmd_materials(const RunConfig& cfg) {
  MaterialDatabase db = load_database(cfg);
  OutputTarget out(cfg);
  RecordWriter writer(out.stream(), cfg.format,
                      {"name", "atomic_mass_amu", "density_g_cm3", "sigma_pm",
                       "temperature_mK", "delta_omega_sn_1rads"});
  for (const auto& name : db.names()) {
    const Material& m = db.lookup(name);
    writer.write({m.name, m.atomic_mass / consts::amu, m.density / 1e3,
                  m.sigma / 1e-12, m.reference_temperature / 1e-3,
                  delta_omega_sn(m, 1.0)});
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// subcommand: shift

struct ShiftArgs {
  std::string material;
  std::string omega0;
  std::string mass;
  int n1 = 0;
  int n2 = 1;
};

int cmd_shift(const RunConfig& cfg, const ShiftArgs& args) {
  MaterialDatabase db = load_database(cfg);
  const Material& mat = db.lookup(args.material);
  const double omega0 = parse_positive(args.omega0, u::Dimension::frequency, "--omega0");
  const double mass = parse_positive(args.mass, u::Dimension::mass, "--mass");
  if (args.n1 < 0 || args.n2 <= args.n1) {
    throw UsageError("--n1/--n2: requires n2 > n1 >= 0");
  }

  const TrapState trap = make_trap_state(mass, omega0, mat.sigma);
  const ShiftResult s = transition_shift(mat, trap, args.n1, args.n2, cfg.quadrature);
  const double transition = (args.n2 - args.n1) * omega0 + s.delta_omega;

  OutputTarget out(cfg);
  RecordWriter writer(out.stream(), cfg.format,
                      {"material", "omega0_rad_s", "mass_amu", "n1", "n2", "alpha",
                       "f_tilde_n1", "f_tilde_n2", "g", "delta_omega_rad_s",
                       "delta_f_hz", "transition_frequency_rad_s",
                       "transition_frequency_hz", "quadrature_error"});
  writer.write({mat.name, omega0, mass / consts::amu,
                static_cast<std::int64_t>(s.n1), static_cast<std::int64_t>(s.n2),
                trap.alpha, s.f_tilde_n1, s.f_tilde_n2, s.g, s.delta_omega,
                s.delta_omega / kTwoPi, transition, transition / kTwoPi,
                s.quadrature_error_estimate});
  return kExitOk;
}

// ---------------------------------------------------------------------------
// subcommand: spectrum (all adjacent lines at one mass)

struct SpectrumArgs {
  std::string material;
  std::string omega0;
  std::string mass;
  int n_max = 13;
};

int cmd_spectrum(const RunConfig& cfg, const SpectrumArgs& args) {
  MaterialDatabase db = load_database(cfg);
  const Material& mat = db.lookup(args.material);
  const double omega0 = parse_positive(args.omega0, u::Dimension::frequency, "--omega0");
  const double mass = parse_positive(args.mass, u::Dimension::mass, "--mass");
  if (args.n_max < 1) throw UsageError("--nmax: must be at least 1");

  // A 2-point scan_spectrum grid would recompute; evaluate directly.
  const double alpha = alpha_of(mass, omega0, mat.sigma);
  const double dwsn = delta_omega_sn(mat, omega0);
  std::vector<double> f(static_cast<std::size_t>(args.n_max) + 1);
  for (int n = 0; n <= args.n_max; ++n) {
    f[static_cast<std::size_t>(n)] = f_tilde(n, alpha, cfg.quadrature).value;
  }

  std::vector<SpectralLine> lines;
  for (int n = 0; n < args.n_max; ++n) {
    SpectralLine line;
    line.n1 = n;
    line.n2 = n + 1;
    line.g = 0.375 * consts::sqrt_two_pi *
             (f[static_cast<std::size_t>(n)] - f[static_cast<std::size_t>(n) + 1]);
    line.delta_omega = dwsn * line.g;
    line.line_frequency = omega0 + line.delta_omega;
    lines.push_back(line);
  }

  double lo = lines.front().g, hi = lines.front().g, sum = 0.0, max_abs = 0.0;
  for (const auto& l : lines) {
    lo = std::min(lo, l.g);
    hi = std::max(hi, l.g);
    sum += l.g;
    max_abs = std::max(max_abs, std::abs(l.g));
  }
  Regime regime = Regime::intermediate;
  if (max_abs < kWideMaxG) regime = Regime::wide;
  else if (hi - lo < kNarrowSpreadFraction * std::abs(sum / lines.size()))
    regime = Regime::narrow;

  OutputTarget out(cfg);
  RecordWriter writer(out.stream(), cfg.format,
                      {"material", "omega0_rad_s", "mass_amu", "alpha", "n1", "n2",
                       "g", "delta_omega_rad_s", "line_frequency_rad_s",
                       "line_frequency_hz", "regime"});
  for (const auto& l : lines) {
    writer.write({mat.name, omega0, mass / consts::amu, alpha,
                  static_cast<std::int64_t>(l.n1), static_cast<std::int64_t>(l.n2),
                  l.g, l.delta_omega, l.line_frequency, l.line_frequency / kTwoPi,
                  std::string(regime_name(regime))});
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// subcommand: scan (coefficient grid over alpha, or mass grid)

struct ScanArgs {
  // alpha mode
  double alpha_min = 0.0;
  double alpha_max = 0.0;
  // mass mode
  std::string material;
  std::string omega0;
  std::string mass_min;
  std::string mass_max;
  int points = 40;
  int n_max = 13;
};

int scan_alpha_grid(const RunConfig& cfg, const ScanArgs& args) {
  if (!(args.alpha_min > 0.0) || !(args.alpha_max > args.alpha_min)) {
    throw UsageError("--alpha-min/--alpha-max: need 0 < alpha-min < alpha-max");
  }
  if (args.points < 2) throw UsageError("--points: need at least 2");
  if (args.n_max < 1) throw UsageError("--nmax: must be at least 1");

  OutputTarget out(cfg);
  RecordWriter writer(out.stream(), cfg.format,
                      {"alpha", "n1", "n2", "g", "status"});
  int failures = 0;
  const double log_lo = std::log(args.alpha_min);
  const double log_hi = std::log(args.alpha_max);
  for (int i = 0; i < args.points; ++i) {
    const double t = static_cast<double>(i) / (args.points - 1);
    const double alpha = std::exp(log_lo + t * (log_hi - log_lo));
    // f~ values shared by adjacent transitions
    std::vector<double> f;
    bool ok = true;
    std::string error;
    try {
      for (int n = 0; n <= args.n_max; ++n) {
        f.push_back(f_tilde(n, alpha, cfg.quadrature).value);
      }
    } catch (const QuadratureError& e) {
      ok = false;
      error = e.what();
      ++failures;
    }
    for (int n = 0; n < args.n_max; ++n) {
      if (ok) {
        const double g = 0.375 * consts::sqrt_two_pi *
                         (f[static_cast<std::size_t>(n)] -
                          f[static_cast<std::size_t>(n) + 1]);
        writer.write({alpha, static_cast<std::int64_t>(n),
                      static_cast<std::int64_t>(n + 1), g, std::string("ok")});
      } else {
        writer.write({alpha, static_cast<std::int64_t>(n),
                      static_cast<std::int64_t>(n + 1), std::nan(""),
                      "error: " + error});
      }
    }
  }
  if (failures > 0) {
    std::cerr << "snspec scan: " << failures << " grid point(s) failed\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int scan_mass_grid(const RunConfig& cfg, const ScanArgs& args) {
  MaterialDatabase db = load_database(cfg);
  const Material& mat = db.lookup(args.material);
  const double omega0 = parse_positive(args.omega0, u::Dimension::frequency, "--omega0");
  const double mass_min = parse_positive(args.mass_min, u::Dimension::mass, "--mass-min");
  const double mass_max = parse_positive(args.mass_max, u::Dimension::mass, "--mass-max");
  if (!(mass_max > mass_min)) throw UsageError("--mass-max must exceed --mass-min");
  if (args.points < 2) throw UsageError("--points: need at least 2");
  if (args.n_max < 1) throw UsageError("--nmax: must be at least 1");

  const SpectrumScan scan = scan_spectrum(mat, omega0, mass_min, mass_max,
                                          args.points, args.n_max, cfg.quadrature);

  OutputTarget out(cfg);
  RecordWriter writer(out.stream(), cfg.format,
                      {"material", "omega0_rad_s", "mass_amu", "alpha", "n1", "n2",
                       "g", "delta_omega_rad_s", "line_frequency_rad_s",
                       "line_frequency_hz", "regime", "status"});
  int failures = 0;
  for (const auto& pt : scan.points) {
    if (!pt.ok) {
      ++failures;
      for (int n = 0; n < args.n_max; ++n) {
        writer.write({mat.name, omega0, pt.mass / consts::amu, pt.alpha,
                      static_cast<std::int64_t>(n), static_cast<std::int64_t>(n + 1),
                      std::nan(""), std::nan(""), std::nan(""), std::nan(""),
                      std::string(""), "error: " + pt.error});
      }
      continue;
    }
    for (const auto& l : pt.lines) {
      writer.write({mat.name, omega0, pt.mass / consts::amu, pt.alpha,
                    static_cast<std::int64_t>(l.n1), static_cast<std::int64_t>(l.n2),
                    l.g, l.delta_omega, l.line_frequency, l.line_frequency / kTwoPi,
                    std::string(regime_name(pt.regime)), std::string("ok")});
    }
  }
  if (failures > 0) {
    std::cerr << "snspec scan: " << failures << " grid point(s) failed\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_scan(const RunConfig& cfg, const ScanArgs& args) {
  const bool alpha_mode = args.alpha_min > 0.0 || args.alpha_max > 0.0;
  const bool mass_mode = !args.mass_min.empty() || !args.mass_max.empty() ||
                         !args.material.empty();
  if (alpha_mode == mass_mode) {
    throw UsageError(
        "scan: choose one grid, either --alpha-min/--alpha-max or "
        "--material/--omega0/--mass-min/--mass-max");
  }
  if (alpha_mode) return scan_alpha_grid(cfg, args);
  if (args.material.empty() || args.omega0.empty() || args.mass_min.empty() ||
      args.mass_max.empty()) {
    throw UsageError("scan: mass mode needs --material, --omega0, --mass-min, --mass-max");
  }
  return scan_mass_grid(cfg, args);
}

// ---------------------------------------------------------------------------
// subcommand: size

struct SizeArgs {
  std::string material;
  std::string omega0;
  double alpha = 0.0;
  std::string mass;
};

int cmd_size(const RunConfig& cfg, const SizeArgs& args) {
  MaterialDatabase db = load_database(cfg);
  const Material& mat = db.lookup(args.material);
  const double omega0 = parse_positive(args.omega0, u::Dimension::frequency, "--omega0");

  double mass, alpha;
  if (args.alpha > 0.0 && !args.mass.empty()) {
    throw UsageError("size: give either --alpha or --mass, not both");
  } else if (args.alpha > 0.0) {
    alpha = args.alpha;
    mass = mass_for_alpha(alpha, omega0, mat.sigma);
  } else if (!args.mass.empty()) {
    mass = parse_positive(args.mass, u::Dimension::mass, "--mass");
    alpha = alpha_of(mass, omega0, mat.sigma);
  } else {
    throw UsageError("size: needs --alpha or --mass");
  }

  OutputTarget out(cfg);
  RecordWriter writer(out.stream(), cfg.format,
                      {"material", "omega0_rad_s", "alpha", "mass_amu", "mass_kg",
                       "sphere_diameter_m", "delta_omega_sn_rad_s"});
  writer.write({mat.name, omega0, alpha, mass / consts::amu, mass,
                sphere_diameter(mass, mat.density), delta_omega_sn(mat, omega0)});
  return kExitOk;
}

// ---------------------------------------------------------------------------
// subcommand: rayleigh

struct RayleighArgs {
  std::string temperature;
  std::string disc;           // "diameter,thickness"
  std::string sphere_radius;
};

int cmd_rayleigh(const RunConfig& cfg, const RayleighArgs& args) {
  const double T = parse_positive(args.temperature, u::Dimension::temperature, "--temp");

  ParticleGeometry geometry;
  std::string shape;
  if (!args.disc.empty() && !args.sphere_radius.empty()) {
    throw UsageError("rayleigh: give either --disc or --sphere-radius, not both");
  } else if (!args.disc.empty()) {
    const auto comma = args.disc.find(',');
    if (comma == std::string::npos) {
      throw UsageError("--disc: expected 'diameter,thickness' (e.g. 3e-6m,1e-6m)");
    }
    const double d = parse_positive(args.disc.substr(0, comma), u::Dimension::length, "--disc");
    const double t = parse_positive(args.disc.substr(comma + 1), u::Dimension::length, "--disc");
    geometry = ParticleGeometry::disc(d, t);
    shape = "disc";
  } else if (!args.sphere_radius.empty()) {
    geometry = ParticleGeometry::sphere(
        parse_positive(args.sphere_radius, u::Dimension::length, "--sphere-radius"));
    shape = "sphere";
  } else {
    throw UsageError("rayleigh: needs --disc or --sphere-radius");
  }

  const RayleighEstimate r = rayleigh_rate(T, geometry);
  OutputTarget out(cfg);
  RecordWriter writer(out.stream(), cfg.format,
                      {"shape", "temperature_K", "volume_m3", "chi_m3", "lambda_T_m",
                       "gamma_R_per_s", "gamma_R_rounded_prefactor_per_s"});
  writer.write({shape, r.temperature, r.volume, r.chi, r.lambda_T, r.gamma_R,
                r.gamma_R_order});
  return kExitOk;
}

// ---------------------------------------------------------------------------
// subcommand: verify

int cmd_verify(const RunConfig& cfg) {
  const oracle::SuiteResult suite = oracle::run_verification_suite();
  OutputTarget out(cfg);
  RecordWriter writer(out.stream(), cfg.format,
                      {"quantity", "analytic_value", "oracle_value",
                       "relative_discrepancy", "threshold", "settings", "status"});
  for (std::size_t i = 0; i < suite.reports.size(); ++i) {
    const auto& r = suite.reports[i];
    const double threshold = suite.thresholds[i];
    writer.write({r.quantity, r.analytic_value, r.oracle_value,
                  r.relative_discrepancy, threshold, r.settings,
                  std::string(r.relative_discrepancy < threshold ? "pass" : "fail")});
  }
  if (!suite.all_passed) {
    std::cerr << "snspec verify: discrepancies above threshold\n";
    return kExitNumerical;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// subcommand: ppoly (debug dump of exact coefficients)

int cmd_ppoly(const RunConfig& cfg, int n) {
  if (n < 0) throw UsageError("--n: must be non-negative");
  OutputTarget out(cfg);
  out.stream() << format_coefficient_table(p_poly(n).poly());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-gravity spectral corrections for trapped microparticles"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "csv";
  app.add_option("--format", format, "Output format: csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  app.add_option("--output", cfg.output_path, "Write records to a file instead of stdout");
  app.add_option("--materials", cfg.materials_path,
                 "Material data file layered over the built-ins "
                 "(also via SNSPEC_MATERIALS)");
  app.add_option("--tolerance", cfg.quadrature.rel_tol,
                 "Relative quadrature tolerance")
      ->check(CLI::PositiveNumber);

  auto* materials_cmd = app.add_subcommand("materials", "List the material database");

  ShiftArgs shift_args;
  auto* shift_cmd = app.add_subcommand("shift", "Single transition-shift query");
  shift_cmd->add_option("--material", shift_args.material, "Material name")->required();
  shift_cmd->add_option("--omega0", shift_args.omega0, "Trap frequency (10Hz, 62.8rad/s)")->required();
  shift_cmd->add_option("--mass", shift_args.mass, "Total mass (1e15amu, 1.66e-12kg)")->required();
  shift_cmd->add_option("--n1", shift_args.n1, "Lower level")->required();
  shift_cmd->add_option("--n2", shift_args.n2, "Upper level")->required();

  SpectrumArgs spectrum_args;
  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "All adjacent lines at one configuration");
  spectrum_cmd->add_option("--material", spectrum_args.material, "Material name")->required();
  spectrum_cmd->add_option("--omega0", spectrum_args.omega0, "Trap frequency")->required();
  spectrum_cmd->add_option("--mass", spectrum_args.mass, "Total mass")->required();
  spectrum_cmd->add_option("--nmax", spectrum_args.n_max, "Number of adjacent lines");

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand(
      "scan", "Coefficient grid over alpha, or line spectrum over a mass grid");
  scan_cmd->add_option("--alpha-min", scan_args.alpha_min, "Alpha grid start");
  scan_cmd->add_option("--alpha-max", scan_args.alpha_max, "Alpha grid end");
  scan_cmd->add_option("--material", scan_args.material, "Material (mass grid)");
  scan_cmd->add_option("--omega0", scan_args.omega0, "Trap frequency (mass grid)");
  scan_cmd->add_option("--mass-min", scan_args.mass_min, "Mass grid start");
  scan_cmd->add_option("--mass-max", scan_args.mass_max, "Mass grid end");
  scan_cmd->add_option("--points", scan_args.points, "Grid points (default 40)");
  scan_cmd->add_option("--nmax", scan_args.n_max, "Transitions per point (default 13)");

  SizeArgs size_args;
  auto* size_cmd = app.add_subcommand("size", "Experiment sizing: alpha <-> mass <-> geometry");
  size_cmd->add_option("--material", size_args.material, "Material name")->required();
  size_cmd->add_option("--omega0", size_args.omega0, "Trap frequency")->required();
  size_cmd->add_option("--alpha", size_args.alpha, "Target alpha");
  size_cmd->add_option("--mass", size_args.mass, "Total mass");

  RayleighArgs rayleigh_args;
  auto* rayleigh_cmd =
      app.add_subcommand("rayleigh", "Blackbody Rayleigh scattering rate");
  rayleigh_cmd->add_option("--temp", rayleigh_args.temperature, "Temperature (0.1K, 100mK)")->required();
  rayleigh_cmd->add_option("--disc", rayleigh_args.disc, "Disc 'diameter,thickness' (3e-6m,1e-6m)");
  rayleigh_cmd->add_option("--sphere-radius", rayleigh_args.sphere_radius, "Sphere radius");

  auto* verify_cmd = app.add_subcommand("verify", "Run the brute-force verification suite");

  int ppoly_n = 0;
  auto* ppoly_cmd = app.add_subcommand(
      "ppoly", "Dump exact P_n coefficients (power numerator denominator)");
  ppoly_cmd->add_option("--n", ppoly_n, "Polynomial index")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  cfg.format = (format == "jsonl") ? OutputFormat::jsonl : OutputFormat::csv;

  try {
    if (materials_cmd->parsed()) return cmd_materials(cfg);
    if (shift_cmd->parsed()) return cmd_shift(cfg, shift_args);
    if (spectrum_cmd->parsed()) return cmd_spectrum(cfg, spectrum_args);
    if (scan_cmd->parsed()) return cmd_scan(cfg, scan_args);
    if (size_cmd->parsed()) return cmd_size(cfg, size_args);
    if (rayleigh_cmd->parsed()) return cmd_rayleigh(cfg, rayleigh_args);
    if (verify_cmd->parsed()) return cmd_verify(cfg);
    if (ppoly_cmd->parsed()) return cmd_ppoly(cfg, ppoly_n);
  } catch (const UsageError& e) {
    std::cerr << "snspec: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotFoundError& e) {
    std::cerr << "snspec: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "snspec: " << e.what() << '\n';
    return kExitUsage;
  } catch (const QuadratureError& e) {
    std::cerr << "snspec: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const DataFileError& e) {
    std::cerr << "snspec: " << e.what() << '\n';
    return kExitDataFile;
  } catch (const Error& e) {
    std::cerr << "snspec: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
