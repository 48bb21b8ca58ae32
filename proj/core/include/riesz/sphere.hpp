#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace riesz {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const;
  // Throws DomainError on the zero vector.
  Vec3 normalized() const;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double a) const { return {a * x, a * y, a * z}; }
  bool operator==(const Vec3&) const = default;
};

// A point of the sphere; the unit-norm invariant is kept by the producers.
using UnitVector = Vec3;

struct Configuration {
  std::vector<UnitVector> points;

  Configuration() = default;
  explicit Configuration(std::vector<UnitVector> p) : points(std::move(p)) {}

  std::size_t n() const { return points.size(); }
  const UnitVector& operator[](std::size_t i) const { return points[i]; }
  UnitVector& operator[](std::size_t i) { return points[i]; }
};

class RieszExponent {
 public:
  enum class Branch { general, logarithmic };

  RieszExponent(double s) : value_(s) {}  // NOLINT: implicit on purpose

  double value() const { return value_; }
  Branch branch() const { return value_ == 0.0 ? Branch::logarithmic : Branch::general; }
  bool is_log() const { return value_ == 0.0; }
  operator double() const { return value_; }  // NOLINT

 private:
  double value_;
};

using EnergyValue = double;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
// Below this |s| the general kernel is evaluated through expm1.
inline constexpr double kLogBranchThreshold = 1e-8;

double chordal_distance(const UnitVector& p, const UnitVector& q);

// V_s(r) = (r^-s - 1)/s, V_0(r) = -ln r.  V_s(0) = -1/s for s < 0, +inf for s >= 0.
double pair_energy(RieszExponent s, double r);

EnergyValue average_pair_energy(RieszExponent s, const Configuration& c);

// Needs n_for_readjust when s >= 2.  n_for_readjust <= 0 means "not given".
double adjusted_pair_energy(RieszExponent s, double r, long n_for_readjust = 0);
EnergyValue average_adjusted_energy(RieszExponent s, const Configuration& c);

double potential_field(RieszExponent s, const Configuration& c, const UnitVector& x);

// Zero-based index.
double point_energy(RieszExponent s, const Configuration& c, std::size_t l);

Configuration remove_point(const Configuration& c, std::size_t l);
Configuration add_point(const Configuration& c, const UnitVector& q);

double master_identity_residual(RieszExponent s, const Configuration& c, std::size_t l);

// Tangent-projected gradient of the average pair energy.
std::vector<Vec3> energy_gradient(RieszExponent s, const Configuration& c);

enum class Conversion { conventional_to_standardized, standardized_to_conventional };
double convert_energy(RieszExponent s, long n, double value, Conversion direction);

double separation(const Configuration& c);

double large_s_packing_functional(RieszExponent s, const Configuration& c);

// Energy and Euclidean-then-projected gradient in one pass; used by the minimizer.
// grad is resized to 3n (x,y,z per point).  Returns +inf on a zero distance when s >= 0.
double energy_and_gradient(double s, const std::vector<double>& xyz, std::vector<double>& grad);
double energy_flat(double s, const std::vector<double>& xyz);

}  // namespace riesz
