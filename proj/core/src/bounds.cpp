#include "riesz/bounds.hpp"

#include <algorithm>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

void require_negative(double s, long n) {
  if (!(s < 0.0)) throw UnsupportedRange("bound holds only for s < 0");
  if (n < 3) throw DomainError("bound needs N >= 3");
}

}  // namespace

BoundReport ddv_bounds_prop1(double s, long n, double v_n, std::optional<double> observed) {
  require_negative(s, n);
  const double N = static_cast<double>(n);
  BoundReport r;
  r.n = n;
  r.s = s;
  r.lower = 2.0 / ((N + 1.0) * (N - 2.0)) * (v_n + 1.0 / s);
  r.upper = -2.0 / ((N + 1.0) * N) * (v_n + 1.0 / s);
  r.observed = observed;
  if (observed) r.satisfied = r.lower <= *observed && *observed <= r.upper;
  return r;
}

double ddv_upper_prop2(double s, long n, double v_nm1) {
  require_negative(s, n);
  const double N = static_cast<double>(n);
  return -2.0 / ((N + 1.0) * N) * (v_nm1 + 1.0 / s);
}

double ddv_upper_pointwise(double s, const Configuration& c_opt) {
  const long n = static_cast<long>(c_opt.n());
  require_negative(s, n);
  const double N = static_cast<double>(n);
  std::size_t lo = 0, hi = 0;
  std::vector<double> pe(c_opt.n());
  for (std::size_t i = 0; i < c_opt.n(); ++i) {
    pe[i] = point_energy(s, c_opt, i);
    if (pe[i] < pe[lo]) lo = i;
    if (pe[i] > pe[hi]) hi = i;
  }
  const double add = average_pair_energy(s, add_point(c_opt, c_opt[hi]));
  const double drop = average_pair_energy(s, remove_point(c_opt, lo));
  const double v0 = -1.0 / s;
  // the exact representation carries -2/(N(N-1)) on the last bracket
  return -(2.0 / N) * (pe[lo] - pe[hi] + add - drop) - 2.0 / (N * (N - 1.0)) * (add - v0);
}

double monotonicity_complement_lower(double s, long n, double v_np1) {
  if (!(s < 0.0)) throw UnsupportedRange("complement estimate holds only for s < 0");
  if (n < 2) throw DomainError("complement estimate needs N >= 2");
  const double N = static_cast<double>(n);
  return (N + 1.0) * N / ((N + 2.0) * (N - 1.0)) * v_np1 - 2.0 * (-1.0 / s) / ((N + 2.0) * (N - 1.0));
}

std::vector<ComplementViolation> check_monotonicity_complement(const EnergyTable& table) {
  std::vector<ComplementViolation> out;
  for (const auto& [n, r] : table.rows) {
    if (n < 2 || !table.contains(n + 1)) continue;
    const double lo = monotonicity_complement_lower(table.s, n, table.v(n + 1));
    if (r.v < lo - 1e-12 || r.v > table.v(n + 1)) out.push_back({n, r.v, lo});
  }
  return out;
}

}  // namespace riesz
