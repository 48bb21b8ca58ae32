#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riesz/sphere.hpp"

namespace riesz {

enum class ShapeKind {
  antipodal,
  equilateral_triangle,
  tetrahedron,
  triangular_bipyramid,
  square_pyramid,
  octahedron,
  pentagonal_bipyramid,
  cube,
  square_antiprism,
  icosahedron,
};

struct NamedShape {
  ShapeKind kind = ShapeKind::antipodal;
  // Square pyramid only: z-coordinate of the base, in (-1, 0).  Height h = 1 - z.
  std::optional<double> parameter;
};

std::string to_string(ShapeKind k);
std::size_t shape_size(ShapeKind k);
Configuration realize(const NamedShape& shape);

struct ValidityWindow {
  double s_lo = 0.0;
  double s_hi = 0.0;
  bool lo_closed = false;
  bool hi_closed = false;
  std::optional<ShapeKind> shape;  // empty when no coordinates are known
  std::string description;

  bool contains(double s) const;
};

// Windows on s > -2 for n in {2..7}, following the small-N optimizer table.
std::vector<ValidityWindow> validity_windows(int n);

enum class WindowTag { exact, upper_bound, lower_bound };
std::string to_string(WindowTag t);

struct WindowedValue {
  double value = 0.0;
  WindowTag tag = WindowTag::exact;
  std::string window;
};

// Closed forms for n in {2..7}.  n = 5 beyond s_dagger uses the square pyramid.
WindowedValue exact_v(int n, RieszExponent s);

double v_minus_two(long n);
double ddv_minus_two(long n);
double v_subcritical_even(double s, long n);

// Closed-form second differences for n in {3,4,5,6}; the tag says whether the
// value is exact or a one-sided bound at this s.
WindowedValue exact_ddv(int n, RieszExponent s);

struct Rational {
  std::string numerator;
  std::string denominator;
  double value = 0.0;
  std::string str() const { return numerator + "/" + denominator; }
};

// Exact rational second difference for n in {3,4,5} at even integer s != 0.
Rational exact_ddv_rational(int n, int s_even);

// Root z in (-1,0) of (1+z)^{1+s/2} + (2 + 2^{-s/2}) z = 0; Newton from z = 0.
double square_pyramid_height(double s, double tol = 1e-14);
std::vector<double> square_pyramid_newton_iterates(double s, double tol = 1e-14);
double square_pyramid_energy(double s);

// Value mantissa * 2^exponent2; survives the underflow of (1/2)^{s/2} at huge s.
struct ScaledReal {
  double mantissa = 0.0;
  double exponent2 = 0.0;
  int sign() const { return mantissa > 0 ? 1 : (mantissa < 0 ? -1 : 0); }
  double value() const;
};

// v(4) - 2 <V>(square pyramid) + v(6), for s > 2.
ScaledReal ddv5_square_pyramid_branch(double s);

double ddv12_upper_bound(double s);

enum class CriticalTarget { s1_of_3, s1_of_4, s1_of_6, s_dagger, s3_crossover };

// s3_crossover uses n (an odd multiple of 3); the other targets ignore it.
double find_critical_s(CriticalTarget target, double tol = 1e-12, long n = 3);

Rational rational_positivity_certificate();

// Bipyramid / square-pyramid crossover, cached after the first call.
double s_dagger();

}  // namespace riesz
