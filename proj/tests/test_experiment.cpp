#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "snspec/constants.hpp"
#include "snspec/errors.hpp"
#include "snspec/experiment.hpp"
#include "snspec/material.hpp"
#include "snspec/spectrum.hpp"

using namespace snspec;

namespace {

double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("particle geometry volumes") {
  const auto sphere = ParticleGeometry::sphere(1e-6);
  CHECK(sphere.volume ==
        doctest::Approx(4.0 / 3.0 * std::numbers::pi * 1e-18).epsilon(1e-12));

  const auto disc = ParticleGeometry::disc(3e-6, 1e-6);
  CHECK(disc.volume ==
        doctest::Approx(std::numbers::pi / 4.0 * 1e-6 * 9e-12).epsilon(1e-12));

  CHECK_THROWS_AS(ParticleGeometry::sphere(0.0), DomainError);
  CHECK_THROWS_AS(ParticleGeometry::disc(3e-6, -1e-6), DomainError);
}

TEST_CASE("alpha_of reference point and scalings") {
  const double omega0 = 2.0 * std::numbers::pi * 10.0;
  const double sigma = 2.77e-12;
  const double M = 1e15 * consts::amu;

  CHECK(alpha_of(M, omega0, sigma) == doctest::Approx(5.510438593).epsilon(1e-8));
  // square-root scalings
  CHECK(alpha_of(4.0 * M, omega0, sigma) ==
        doctest::Approx(2.0 * alpha_of(M, omega0, sigma)).epsilon(1e-12));
  CHECK(alpha_of(M, 4.0 * omega0, sigma) ==
        doctest::Approx(2.0 * alpha_of(M, omega0, sigma)).epsilon(1e-12));
  CHECK_THROWS_AS(alpha_of(0.0, omega0, sigma), DomainError);
}

TEST_CASE("mass_for_alpha inverts alpha_of") {
  const double sigma = 2.77e-12;
  const double omega0 = 2.0 * std::numbers::pi;

  // alpha = 5 sizing comes out near 1e16 amu for osmium at 1 Hz
  const double M = mass_for_alpha(5.0, omega0, sigma);
  CHECK(M / consts::amu == doctest::Approx(8.233181215e15).epsilon(1e-8));
  CHECK(M / consts::amu > 0.5e16);
  CHECK(M / consts::amu < 2e16);

  // exact round trip
  for (double alpha : {0.3, 1.0, 5.0, 40.0}) {
    const double m = mass_for_alpha(alpha, omega0, sigma);
    CHECK(rel_diff(alpha_of(m, omega0, sigma), alpha) < 1e-12);
  }

  // 1/omega0 scaling
  CHECK(mass_for_alpha(5.0, 10.0 * omega0, sigma) ==
        doctest::Approx(M / 10.0).epsilon(1e-12));
}

TEST_CASE("sphere diameter") {
  // osmium particle of 1e15 amu is 5.2 um across
  const double d = sphere_diameter(1e15 * consts::amu, 22570.0);
  CHECK(d == doctest::Approx(5.198838248e-6).epsilon(1e-8));
  CHECK(std::abs(d - 5.2e-6) <= 0.02 * 5.2e-6);

  // cube-root scaling
  CHECK(sphere_diameter(8e15 * consts::amu, 22570.0) ==
        doctest::Approx(2.0 * d).epsilon(1e-12));

  // unit sphere: M = 4 pi rho / 3 gives diameter 2
  const double rho = 123.4;
  CHECK(sphere_diameter(4.0 * std::numbers::pi * rho / 3.0, rho) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("spectrum scan structure and consistency") {
  MaterialDatabase db;
  const Material& os = db.lookup("osmium");
  const double omega0 = 2.0 * std::numbers::pi * 10.0;

  const SpectrumScan scan =
      scan_spectrum(os, omega0, 1e13 * consts::amu, 1e18 * consts::amu, 11, 4);
  CHECK(scan.points.size() == 11);
  CHECK(scan.n_max == 4);

  const double dwsn = delta_omega_sn(os, omega0);
  double prev_mass = 0.0;
  for (const auto& pt : scan.points) {
    CHECK(pt.mass > prev_mass);
    prev_mass = pt.mass;
    REQUIRE(pt.ok);
    REQUIRE(pt.lines.size() == 4);
    CHECK(pt.alpha == doctest::Approx(alpha_of(pt.mass, omega0, os.sigma)));
    for (const auto& line : pt.lines) {
      CHECK(line.n2 == line.n1 + 1);
      // line frequency is omega0 + dw_SN * g to 1e-12
      CHECK(std::abs(line.line_frequency - (omega0 + dwsn * line.g)) <=
            1e-12 * line.line_frequency);
      CHECK(std::abs(line.delta_omega - dwsn * line.g) <=
            1e-12 * std::max(std::abs(line.delta_omega), 1e-30));
    }
  }

  // extremes of this grid are degenerate, middle is not
  CHECK(scan.points.front().regime == Regime::wide);
  CHECK(scan.points.back().regime == Regime::narrow);
  CHECK(scan.points[5].regime == Regime::intermediate);
}

TEST_CASE("scan regime labels are monotone in mass") {
  MaterialDatabase db;
  for (const char* name : {"osmium", "silicon"}) {
    const Material& m = db.lookup(name);
    for (double omega0 : {2.0 * std::numbers::pi, 2.0 * std::numbers::pi * 100.0}) {
      const SpectrumScan scan = scan_spectrum(
          m, omega0, 1e11 * consts::amu, 1e20 * consts::amu, 19, 4);
      int stage = 0;  // wide -> intermediate -> narrow
      for (const auto& pt : scan.points) {
        REQUIRE(pt.ok);
        int s = pt.regime == Regime::wide ? 0
                : pt.regime == Regime::intermediate ? 1 : 2;
        CHECK(s >= stage);
        stage = std::max(stage, s);
      }
      CHECK(stage == 2);
    }
  }
}

TEST_CASE("scan validates its inputs") {
  MaterialDatabase db;
  const Material& os = db.lookup("osmium");
  CHECK_THROWS_AS(scan_spectrum(os, 1.0, 1e-12, 1e-13, 5, 3), DomainError);
  CHECK_THROWS_AS(scan_spectrum(os, 1.0, 1e-13, 1e-12, 1, 3), DomainError);
  CHECK_THROWS_AS(scan_spectrum(os, 1.0, 1e-13, 1e-12, 5, 0), DomainError);
  CHECK_THROWS_AS(scan_spectrum(os, 0.0, 1e-13, 1e-12, 5, 3), DomainError);
}

TEST_CASE("identical m/sigma gives identical delta_omega_sn") {
  // the scale depends only on atomic mass, sigma, omega0
  Material a = Material::from_paper_units("a", 100.0, 10.0, 3.0, 100.0);
  Material b = Material::from_paper_units("b", 100.0, 21.7, 3.0, 100.0);
  CHECK(delta_omega_sn(a, 7.0) == delta_omega_sn(b, 7.0));
}

TEST_CASE("rayleigh estimate frozen values") {
  // 100 mK disc, 3 um diameter x 1 um thickness
  const auto r = rayleigh_rate(0.1, ParticleGeometry::disc(3e-6, 1e-6));
  CHECK(r.lambda_T == doctest::Approx(0.14387768775).epsilon(1e-10));
  CHECK(std::abs(r.lambda_T - 0.144) <= 0.02 * 0.144);
  CHECK(r.chi == doctest::Approx(3.0 * r.volume).epsilon(1e-15));
  CHECK(r.gamma_R == doctest::Approx(1.00127970251e-12).epsilon(1e-9));
  CHECK(r.gamma_R_order == doctest::Approx(1.05626732706e-12).epsilon(1e-9));

  // sphere of radius 1 um: same order of magnitude
  const auto s = rayleigh_rate(0.1, ParticleGeometry::sphere(1e-6));
  CHECK(s.gamma_R == doctest::Approx(3.51615368783e-13).epsilon(1e-9));
  CHECK(s.gamma_R / r.gamma_R > 0.1);
  CHECK(s.gamma_R / r.gamma_R < 1.0);

  CHECK_THROWS_AS(rayleigh_rate(0.0, ParticleGeometry::sphere(1e-6)), DomainError);
}

TEST_CASE("rayleigh scaling laws are exact") {
  const auto geometry = ParticleGeometry::disc(3e-6, 1e-6);
  const auto base = rayleigh_rate(0.1, geometry);

  // T^7: doubling T multiplies the rate by 128
  const auto hot = rayleigh_rate(0.2, geometry);
  CHECK(rel_diff(hot.gamma_R, 128.0 * base.gamma_R) < 1e-12);
  CHECK(rel_diff(hot.lambda_T, base.lambda_T / 2.0) < 1e-12);

  // V^2: doubling the volume multiplies the rate by 4
  const auto thick = rayleigh_rate(0.1, ParticleGeometry::disc(3e-6, 2e-6));
  CHECK(rel_diff(thick.gamma_R, 4.0 * base.gamma_R) < 1e-12);
}
