#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace snspec {

/**
 * @brief Bulk and crystallographic properties of an elemental solid.
 *
 * All stored values are strict SI (kg, m, kg/m^3, K); the `from_paper_units`
 * factory accepts the conventional amu / g/cm^3 / pm inputs.
 */
struct Material {
  std::string name;
  double atomic_mass = 0.0;     // kg
  double density = 0.0;         // kg/m^3
  double sigma = 0.0;           // nuclear localization length, m
  std::optional<double> debye_waller_B;  // m^2; sigma = 2*pi*sqrt(B) when set
  double reference_temperature = 0.0;    // K

  static Material from_paper_units(std::string name, double atomic_mass_amu,
                                   double density_g_cm3, double sigma_pm,
                                   double temperature_mK);
};

/// Nuclear localization length from the Debye-Waller B-factor: 2*pi*sqrt(B).
/// B in m^2; throws DomainError for non-positive B.
double sigma_from_B(double B);

/**
 * @brief Name-keyed collection of materials.
 *
 * Construction installs the built-in defaults (silicon, tungsten, osmium and
 * gold at 100 mK). A plain-text data file can be layered on top; entries in
 * the file replace same-named built-ins and add new names. Lookup is
 * case-insensitive. Immutable after loading, so concurrent readers are safe.
 *
 * Data file format, one record per line, '#' starts a comment:
 *
 *     name atomic_mass_amu=<v> density_g_cm3=<v> sigma_pm=<v> temperature_mK=<v>
 *
 * `sigma_pm` may be replaced by `debye_waller_B_A2` (B-factor in Angstrom^2),
 * from which sigma is derived.
 */
class MaterialDatabase {
 public:
  /// Database holding only the built-in defaults.
  MaterialDatabase();

  /// Database with no entries (for tests and fully file-driven setups).
  static MaterialDatabase empty();

  /// Layers `path` on top of the current contents. Throws DataFileError on
  /// I/O or parse problems, including duplicate names within the file.
  void load_file(const std::filesystem::path& path);
  void load_stream(std::istream& in, std::string_view origin);

  /// Adds or replaces one entry.
  void add(Material m);

  /// Case-insensitive lookup. Throws NotFoundError listing available names.
  const Material& lookup(std::string_view name) const;

  bool contains(std::string_view name) const;

  /// Names in insertion order (built-ins first).
  std::vector<std::string> names() const;

  std::size_t size() const { return entries_.size(); }

 private:
  struct Tag {};
  explicit MaterialDatabase(Tag) {}

  std::vector<Material> entries_;

  const Material* find(std::string_view name) const;
};

}  // namespace snspec
