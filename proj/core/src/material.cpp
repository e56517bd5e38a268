#include "snspec/material.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "snspec/constants.hpp"
#include "snspec/errors.hpp"

namespace snspec {

namespace {

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

double sigma_from_B(double B) {
  if (!(B > 0.0)) {
    throw DomainError("Debye-Waller B-factor must be positive");
  }
  return 2.0 * std::numbers::pi * std::sqrt(B);
}

Material Material::from_paper_units(std::string name, double atomic_mass_amu,
                                    double density_g_cm3, double sigma_pm,
                                    double temperature_mK) {
  if (!(atomic_mass_amu > 0.0) || !(density_g_cm3 > 0.0) || !(sigma_pm > 0.0)) {
    throw DomainError("material '" + name +
                      "': atomic mass, density and sigma must be positive");
  }
  Material m;
  m.name = std::move(name);
  m.atomic_mass = atomic_mass_amu * consts::amu;
  m.density = density_g_cm3 * 1e3;
  m.sigma = sigma_pm * 1e-12;
  m.reference_temperature = temperature_mK * 1e-3;
  return m;
}

MaterialDatabase::MaterialDatabase() {
  // Defaults at T = 100 mK.
  add(Material::from_paper_units("silicon", 28.086, 2.329, 6.96, 100.0));
  add(Material::from_paper_units("tungsten", 183.84, 19.30, 3.48, 100.0));
  add(Material::from_paper_units("osmium", 190.23, 22.57, 2.77, 100.0));
  add(Material::from_paper_units("gold", 196.97, 19.32, 4.66, 100.0));
}

MaterialDatabase MaterialDatabase::empty() { return MaterialDatabase(Tag{}); }

void MaterialDatabase::add(Material m) {
  if (m.name.empty()) throw DomainError("material name must not be empty");
  const std::string key = to_lower(m.name);
  for (auto& e : entries_) {
    if (to_lower(e.name) == key) {
      e = std::move(m);
      return;
    }
  }
  entries_.push_back(std::move(m));
}

const Material* MaterialDatabase::find(std::string_view name) const {
  const std::string key = to_lower(name);
  for (const auto& e : entries_) {
    if (to_lower(e.name) == key) return &e;
  }
  return nullptr;
}

bool MaterialDatabase::contains(std::string_view name) const {
  return find(name) != nullptr;
}

const Material& MaterialDatabase::lookup(std::string_view name) const {
  if (const Material* m = find(name)) return *m;
  std::ostringstream os;
  os << "unknown material '" << std::string(name) << "'; available:";
  auto sorted = names();
  std::sort(sorted.begin(), sorted.end());
  for (const auto& n : sorted) os << ' ' << n;
  throw NotFoundError(os.str());
}

std::vector<std::string> MaterialDatabase::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

void MaterialDatabase::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DataFileError("cannot open material data file '" + path.string() + "'");
  }
  load_stream(in, path.string());
}

void MaterialDatabase::load_stream(std::istream& in, std::string_view origin) {
  std::string line;
  int lineno = 0;
  std::vector<std::string> seen;
  auto fail = [&](const std::string& msg) {
    std::ostringstream os;
    os << std::string(origin) << ":" << lineno << ": " << msg;
    throw DataFileError(os.str());
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;  // blank line

    std::map<std::string, double> kv;
    std::string tok;
    while (ls >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size()) {
        fail("expected key=value, got '" + tok + "'");
      }
      std::string key = tok.substr(0, eq);
      std::string val = tok.substr(eq + 1);
      char* end = nullptr;
      double v = std::strtod(val.c_str(), &end);
      if (end != val.c_str() + val.size()) fail("bad number '" + val + "' for " + key);
      if (!kv.emplace(key, v).second) fail("duplicate key '" + key + "'");
    }

    auto take = [&](const std::string& key) -> std::optional<double> {
      auto it = kv.find(key);
      if (it == kv.end()) return std::nullopt;
      double v = it->second;
      kv.erase(it);
      return v;
    };

    auto mass = take("atomic_mass_amu");
    auto rho = take("density_g_cm3");
    auto sigma_pm = take("sigma_pm");
    auto B_A2 = take("debye_waller_B_A2");
    auto temp = take("temperature_mK");
    if (!kv.empty()) fail("unknown key '" + kv.begin()->first + "'");
    if (!mass || !rho || !temp) {
      fail("record needs atomic_mass_amu, density_g_cm3 and temperature_mK");
    }
    if (sigma_pm.has_value() == B_A2.has_value()) {
      fail("record needs exactly one of sigma_pm or debye_waller_B_A2");
    }

    Material m;
    if (sigma_pm) {
      m = Material::from_paper_units(name, *mass, *rho, *sigma_pm, *temp);
    } else {
      if (!(*B_A2 > 0.0)) fail("debye_waller_B_A2 must be positive");
      const double B_m2 = *B_A2 * 1e-20;
      const double sigma_m = sigma_from_B(B_m2);
      m = Material::from_paper_units(name, *mass, *rho, sigma_m * 1e12, *temp);
      m.debye_waller_B = B_m2;
    }

    const std::string key = to_lower(name);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      fail("duplicate material '" + name + "' in the same file");
    }
    seen.push_back(key);
    add(std::move(m));
  }
}

}  // namespace snspec
