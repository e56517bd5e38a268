#pragma once

#include <string>
#include <string_view>

namespace snspec::units {

enum class Dimension { mass, length, density, frequency, temperature };

enum class Unit {
  // mass
  kilogram,
  gram,
  amu,
  // length
  meter,
  centimeter,
  millimeter,
  micrometer,
  nanometer,
  picometer,
  // density
  kg_per_m3,
  g_per_cm3,
  // frequency; the SI-internal representation is angular (rad/s)
  rad_per_s,
  hertz,
  kilohertz,
  millihertz,
  // temperature
  kelvin,
  millikelvin,
};

Dimension dimension_of(Unit u);

/// Unit suffix as accepted on the command line ("Hz", "amu", "g/cm3", ...).
std::string_view unit_symbol(Unit u);

/// Factor that takes one of `u` to the SI-internal base of its dimension
/// (kg, m, kg/m^3, rad/s, K).
double si_factor(Unit u);

/// Exact conversion between dimensionally compatible units.
/// Throws DomainError if the dimensions differ.
double convert(double value, Unit from, Unit to);

struct Quantity {
  double value;
  Unit unit;
};

/// Parses a number with a mandatory unit suffix, e.g. "10Hz", "1e15amu",
/// "2.77pm". Throws DomainError when the suffix is missing or unknown.
Quantity parse_quantity(std::string_view text);

/// parse_quantity restricted to one dimension, returned in the SI-internal
/// base unit of that dimension.
double parse_si(std::string_view text, Dimension expected);

std::string_view dimension_name(Dimension d);

}  // namespace snspec::units
