#pragma once

#include <array>
#include <vector>

#include "riesz/sphere.hpp"
#include "riesz/table.hpp"

namespace riesz {

struct UnitSquarePointSet {
  enum class Generator { sobol };
  std::vector<std::array<double, 2>> points;
  Generator generator = Generator::sobol;
};

struct SphericalNet {
  Configuration config;
  UnitSquarePointSet source;
};

// First `count` points of the two-dimensional Sobol' sequence (Gray-code order), starting at index 0
// unless skip_zero is set.
UnitSquarePointSet sobol_points(std::size_t count, bool skip_zero = false);

UnitVector lambert_lift(double u, double v);
SphericalNet lambert_lift(const UnitSquarePointSet& pts);

inline constexpr const char* kNetTableLabel = "net, not optimal";

// <V_s> of the prefixes omega_2 .. omega_{n_max}; rows with coincident points at s >= 0 are +inf.
EnergyTable net_energy_curve(RieszExponent s, std::size_t n_max, bool skip_zero = false);

}  // namespace riesz
