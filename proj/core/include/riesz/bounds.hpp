#pragma once

#include <optional>

#include "riesz/sphere.hpp"
#include "riesz/table.hpp"

namespace riesz {

struct BoundReport {
  long n = 0;
  double s = 0.0;
  double lower = -kInfinity;
  double upper = kInfinity;
  std::optional<double> observed;
  bool satisfied = true;  // lower <= observed <= upper when observed is present
};

// s < 0, n >= 3: two-sided bound on ddv(N) from v(N).
BoundReport ddv_bounds_prop1(double s, long n, double v_n, std::optional<double> observed = std::nullopt);

// s < 0, n >= 3: upper bound on ddv(N) from v(N-1).
double ddv_upper_prop2(double s, long n, double v_nm1);

// s < 0: upper bound on ddv(N) from an optimal N-point configuration.
double ddv_upper_pointwise(double s, const Configuration& c_opt);

// Lower estimate of v(N) in terms of v(N+1), for s < 0.
double monotonicity_complement_lower(double s, long n, double v_np1);

struct ComplementViolation {
  long n = 0;
  double v = 0.0;
  double lower = 0.0;
};
// Checks v(N) >= v(N-1) and the complementary lower estimate on a table with s < 0.
std::vector<ComplementViolation> check_monotonicity_complement(const EnergyTable& table);

}  // namespace riesz
