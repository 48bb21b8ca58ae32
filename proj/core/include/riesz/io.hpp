#pragma once

#include <iosfwd>
#include <string>

#include "riesz/sphere.hpp"
#include "riesz/table.hpp"

namespace riesz {

inline constexpr const char* kTableHeader = "N,s,energy,provenance";
inline constexpr const char* kConventionalHeader = "N,s,conventional_energy,provenance";

// Reads either header; conventional energies are converted to v on load.
EnergyTable read_energy_table(std::istream& in);
EnergyTable read_energy_table(const std::string& path);
void write_energy_table(const EnergyTable& table, std::ostream& out);
void write_energy_table(const EnergyTable& table, const std::string& path);

// First line N, then N lines x,y,z.  Points off the sphere by more than 1e-5 are rejected.
Configuration read_configuration(std::istream& in);
Configuration read_configuration(const std::string& path);
void write_configuration(const Configuration& c, std::ostream& out);
void write_configuration(const Configuration& c, const std::string& path);

// 17 significant digits.
std::string format_real(double v);

}  // namespace riesz
