#include "snspec/units.hpp"

#include <array>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "snspec/constants.hpp"
#include "snspec/errors.hpp"

namespace snspec::units {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

struct UnitInfo {
  Unit unit;
  Dimension dim;
  std::string_view symbol;
  double to_si;
};

// Suffixes are matched exactly and case-sensitively ("mHz" vs "Hz",
// "mK" vs "K", "kg" vs "K").
constexpr std::array<UnitInfo, 17> kUnits{{
    {Unit::amu, Dimension::mass, "amu", consts::amu},
    {Unit::kilogram, Dimension::mass, "kg", 1.0},
    {Unit::gram, Dimension::mass, "g", 1e-3},
    {Unit::g_per_cm3, Dimension::density, "g/cm3", 1e3},
    {Unit::kg_per_m3, Dimension::density, "kg/m3", 1.0},
    {Unit::rad_per_s, Dimension::frequency, "rad/s", 1.0},
    {Unit::millihertz, Dimension::frequency, "mHz", two_pi * 1e-3},
    {Unit::kilohertz, Dimension::frequency, "kHz", two_pi * 1e3},
    {Unit::hertz, Dimension::frequency, "Hz", two_pi},
    {Unit::picometer, Dimension::length, "pm", 1e-12},
    {Unit::nanometer, Dimension::length, "nm", 1e-9},
    {Unit::micrometer, Dimension::length, "um", 1e-6},
    {Unit::millimeter, Dimension::length, "mm", 1e-3},
    {Unit::centimeter, Dimension::length, "cm", 1e-2},
    {Unit::meter, Dimension::length, "m", 1.0},
    {Unit::millikelvin, Dimension::temperature, "mK", 1e-3},
    {Unit::kelvin, Dimension::temperature, "K", 1.0},
}};

const UnitInfo& info(Unit u) {
  for (const auto& e : kUnits) {
    if (e.unit == u) return e;
  }
  throw DomainError("unknown unit tag");
}

std::string known_suffixes(Dimension d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& e : kUnits) {
    if (e.dim != d) continue;
    if (!first) os << ", ";
    os << e.symbol;
    first = false;
  }
  return os.str();
}

std::string all_suffixes() {
  std::ostringstream os;
  bool first = true;
  for (const auto& e : kUnits) {
    if (!first) os << ", ";
    os << e.symbol;
    first = false;
  }
  return os.str();
}

}  // namespace

Dimension dimension_of(Unit u) { return info(u).dim; }

std::string_view unit_symbol(Unit u) { return info(u).symbol; }

double si_factor(Unit u) { return info(u).to_si; }

std::string_view dimension_name(Dimension d) {
  switch (d) {
    case Dimension::mass: return "mass";
    case Dimension::length: return "length";
    case Dimension::density: return "density";
    case Dimension::frequency: return "frequency";
    case Dimension::temperature: return "temperature";
  }
  return "?";
}

double convert(double value, Unit from, Unit to) {
  const UnitInfo& a = info(from);
  const UnitInfo& b = info(to);
  if (a.dim != b.dim) {
    std::ostringstream os;
    os << "incompatible units: " << a.symbol << " (" << dimension_name(a.dim)
       << ") -> " << b.symbol << " (" << dimension_name(b.dim) << ")";
    throw DomainError(os.str());
  }
  if (from == to) return value;
  return value * (a.to_si / b.to_si);
}

Quantity parse_quantity(std::string_view text) {
  std::string buf(text);
  const char* begin = buf.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end == begin) {
    throw DomainError("could not parse a number from '" + buf + "'");
  }
  std::string_view suffix(end);
  if (suffix.empty()) {
    throw DomainError("missing unit suffix on '" + buf +
                      "' (known suffixes: " + all_suffixes() + ")");
  }
  for (const auto& e : kUnits) {
    if (suffix == e.symbol) return Quantity{value, e.unit};
  }
  throw DomainError("unknown unit suffix '" + std::string(suffix) +
                    "' in '" + buf + "' (known suffixes: " + all_suffixes() + ")");
}

double parse_si(std::string_view text, Dimension expected) {
  Quantity q = parse_quantity(text);
  Dimension got = dimension_of(q.unit);
  if (got != expected) {
    std::ostringstream os;
    os << "'" << std::string(text) << "' has dimension " << dimension_name(got)
       << ", expected " << dimension_name(expected)
       << " (suffixes: " << known_suffixes(expected) << ")";
    throw DomainError(os.str());
  }
  return q.value * si_factor(q.unit);
}

}  // namespace snspec::units
