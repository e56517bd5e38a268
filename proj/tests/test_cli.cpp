#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(SNSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.stdout_text.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) out.push_back(field);
  return out;
}

}  // namespace

TEST_CASE("materials lists the built-in table") {
  const auto r = run_cli("materials");
  REQUIRE(r.exit_code == 0);
  const auto rows = lines_of(r.stdout_text);
  REQUIRE(rows.size() == 5);  // header + 4 built-ins
  CHECK(rows[0] ==
        "name,atomic_mass_amu,density_g_cm3,sigma_pm,temperature_mK,"
        "delta_omega_sn_1rads");

  const auto osmium = split_csv(rows[3]);
  REQUIRE(osmium.size() == 6);
  CHECK(osmium[0] == "osmium");
  CHECK(std::stod(osmium[1]) == doctest::Approx(190.23));
  CHECK(std::stod(osmium[2]) == doctest::Approx(22.57));
  CHECK(std::stod(osmium[3]) == doctest::Approx(2.77));
  CHECK(std::stod(osmium[4]) == doctest::Approx(100.0));
  CHECK(std::stod(osmium[5]) == doctest::Approx(0.264).epsilon(0.01));
}

TEST_CASE("shift reproduces the reference configuration") {
  const auto r = run_cli(
      "shift --material osmium --omega0 10Hz --mass 1e15amu --n1 0 --n2 1");
  REQUIRE(r.exit_code == 0);
  const auto rows = lines_of(r.stdout_text);
  REQUIRE(rows.size() == 2);
  const auto header = split_csv(rows[0]);
  const auto vals = split_csv(rows[1]);
  REQUIRE(header.size() == vals.size());

  auto field = [&](const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return vals[i];
    }
    FAIL("missing column ", name);
    return std::string();
  };

  CHECK(field("material") == "osmium");
  CHECK(std::stod(field("alpha")) == doctest::Approx(5.5104).epsilon(1e-3));
  // splitting scale ~0.1 mHz: delta_f in the sub-mHz range
  const double delta_f = std::stod(field("delta_f_hz"));
  CHECK(delta_f > 1e-5);
  CHECK(delta_f < 1e-2);
  const double g = std::stod(field("g"));
  CHECK(g > 0.5);
  CHECK(g < 1.0);
}

TEST_CASE("output is byte-identical across runs") {
  const auto a = run_cli("spectrum --material osmium --omega0 10Hz --mass 1e15amu --nmax 4");
  const auto b = run_cli("spectrum --material osmium --omega0 10Hz --mass 1e15amu --nmax 4");
  REQUIRE(a.exit_code == 0);
  CHECK(a.stdout_text == b.stdout_text);
  CHECK(lines_of(a.stdout_text).size() == 5);  // header + 4 lines
}

TEST_CASE("jsonl format emits one object per record") {
  const auto r = run_cli("size --material osmium --omega0 1Hz --alpha 5 --format jsonl");
  REQUIRE(r.exit_code == 0);
  const auto rows = lines_of(r.stdout_text);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].front() == '{');
  CHECK(rows[0].back() == '}');
  CHECK(rows[0].find("\"material\":\"osmium\"") != std::string::npos);
  CHECK(rows[0].find("\"mass_amu\":8.23318") != std::string::npos);
}

TEST_CASE("rayleigh matches the supplement numbers") {
  const auto r = run_cli("rayleigh --temp 0.1K --disc 3e-6m,1e-6m");
  REQUIRE(r.exit_code == 0);
  const auto rows = lines_of(r.stdout_text);
  REQUIRE(rows.size() == 2);
  const auto header = split_csv(rows[0]);
  const auto vals = split_csv(rows[1]);
  auto field = [&](const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return std::stod(vals[i]);
    }
    FAIL("missing column ", name);
    return 0.0;
  };
  CHECK(field("lambda_T_m") == doctest::Approx(0.1438777).epsilon(1e-4));
  const double gamma = field("gamma_R_per_s");
  CHECK(gamma > 1e-12 / 3.0);
  CHECK(gamma < 1e-12 * 3.0);
}

TEST_CASE("scan over alpha produces flagged-status records") {
  const auto r = run_cli("scan --alpha-min 40 --alpha-max 60 --points 3 --nmax 2");
  REQUIRE(r.exit_code == 0);
  const auto rows = lines_of(r.stdout_text);
  REQUIRE(rows.size() == 7);  // header + 3 points x 2 transitions
  CHECK(rows[0] == "alpha,n1,n2,g,status");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto vals = split_csv(rows[i]);
    REQUIRE(vals.size() == 5);
    CHECK(vals[4] == "ok");
    CHECK(std::stod(vals[3]) == doctest::Approx(1.0).epsilon(0.05));
  }
}

TEST_CASE("scan over mass emits regimes") {
  const auto r = run_cli(
      "scan --material osmium --omega0 10Hz --mass-min 1e13amu "
      "--mass-max 1e18amu --points 6 --nmax 2");
  REQUIRE(r.exit_code == 0);
  const auto rows = lines_of(r.stdout_text);
  REQUIRE(rows.size() == 13);  // header + 6 points x 2 transitions
  const auto first = split_csv(rows[1]);
  const auto last = split_csv(rows.back());
  // columns: ... regime is second-to-last
  CHECK(first[first.size() - 2] == "wide");
  CHECK(last[last.size() - 2] == "narrow");
}

TEST_CASE("ppoly dumps exact fractions") {
  const auto r = run_cli("ppoly --n 1");
  REQUIRE(r.exit_code == 0);
  CHECK(r.stdout_text == "0 3 4\n1 0 1\n2 -1 2\n3 0 1\n4 1 4\n");
}

TEST_CASE("materials file override via flag") {
  const std::string path = "/tmp/snspec_test_materials.dat";
  {
    std::ofstream f(path);
    f << "testium atomic_mass_amu=50 density_g_cm3=5 sigma_pm=3 temperature_mK=100\n";
  }
  const auto r = run_cli("--materials " + path + " materials");
  REQUIRE(r.exit_code == 0);
  CHECK(r.stdout_text.find("testium") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  // usage: unknown flag
  CHECK(run_cli("shift --no-such-flag 3").exit_code == 1);
  // usage: missing unit suffix names the flag
  CHECK(run_cli("shift --material osmium --omega0 10 --mass 1e15amu --n1 0 --n2 1")
            .exit_code == 1);
  // usage: unknown material
  CHECK(run_cli("shift --material unobtainium --omega0 10Hz --mass 1e15amu "
                "--n1 0 --n2 1").exit_code == 1);
  // usage: bad level ordering
  CHECK(run_cli("shift --material osmium --omega0 10Hz --mass 1e15amu "
                "--n1 2 --n2 1").exit_code == 1);
  // data file error
  CHECK(run_cli("--materials /nonexistent.dat materials").exit_code == 3);
  // no subcommand
  CHECK(run_cli("").exit_code == 1);
  // help exits 0
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("verify subcommand reports all-pass") {
  const auto r = run_cli("verify");
  REQUIRE(r.exit_code == 0);
  const auto rows = lines_of(r.stdout_text);
  REQUIRE(rows.size() > 80);
  CHECK(rows[0] ==
        "quantity,analytic_value,oracle_value,relative_discrepancy,threshold,"
        "settings,status");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto vals = split_csv(rows[i]);
    CHECK(vals.back() == "pass");
  }
}
