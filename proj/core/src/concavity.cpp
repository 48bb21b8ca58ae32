#include "riesz/concavity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

double row(const EnergyTable& t, long n) {
  if (!t.contains(n)) throw DomainError("table has no row for N=" + std::to_string(n));
  return t.v(n);
}

}  // namespace

double second_diff(const EnergyTable& table, long n) {
  return row(table, n - 1) - 2.0 * row(table, n) + row(table, n + 1);
}

double forward_diff(const EnergyTable& table, long n) { return row(table, n + 1) - row(table, n); }

double backward_diff(const EnergyTable& table, long n) { return row(table, n) - row(table, n - 1); }

ConvexityReport convexity_sets(const EnergyTable& table, double tol) {
  if (tol < 0.0) throw DomainError("convexity_sets: tol >= 0");
  if (table.size() < 3 || !table.contiguous())
    throw DomainError("convexity_sets: needs a contiguous table with at least three rows");
  ConvexityReport r;
  r.s = table.s;
  r.tol = tol;
  r.n_lo = table.n_min() + 1;
  r.n_hi = table.n_max() - 1;
  for (long n = r.n_lo; n <= r.n_hi; ++n) {
    const double d = second_diff(table, n);
    if (!std::isfinite(d)) throw DomainError("convexity_sets: non-finite second difference at N=" + std::to_string(n));
    r.ddv[n] = d;
    if (d > tol)
      r.c_plus.insert(n);
    else if (d < -tol)
      r.c_minus.insert(n);
    else
      r.c_zero.insert(n);
  }
  return r;
}

std::map<long, int> signed_indicator(const IntSet& a, const IntSet& b, long lo, long hi) {
  std::map<long, int> out;
  for (long n = lo; n <= hi; ++n) {
    const bool in_a = a.count(n) != 0, in_b = b.count(n) != 0;
    out[n] = in_b && !in_a ? 1 : (in_a && !in_b ? -1 : 0);
  }
  return out;
}

std::vector<MonotonicityViolation> monotonicity_check_N(const EnergyTable& table) {
  std::vector<MonotonicityViolation> out;
  bool have = false;
  double running_max = 0.0;
  long argmax = 0;
  for (const auto& [n, r] : table.rows) {
    if (have && !(r.v > running_max)) {
      std::ostringstream os;
      os.precision(17);
      os << "v(" << n << ") = " << r.v << " does not exceed v(" << argmax << ") = " << running_max;
      out.push_back({n, argmax, table.s, table.s, os.str()});
    }
    if (!have || r.v > running_max) {
      running_max = r.v;
      argmax = n;
    }
    have = true;
  }
  return out;
}

std::vector<MonotonicityViolation> monotonicity_check_s(const std::vector<EnergyTable>& tables) {
  std::vector<MonotonicityViolation> out;
  for (std::size_t i = 0; i + 1 < tables.size(); ++i) {
    const auto& a = tables[i];
    const auto& b = tables[i + 1];
    if (!(a.s < b.s)) throw DomainError("monotonicity_check_s: tables must be ordered by increasing s");
    for (const auto& [n, r] : a.rows) {
      if (!b.contains(n)) continue;
      if (r.v >= b.v(n)) {
        std::ostringstream os;
        os.precision(17);
        os << "N=" << n << ": v at s=" << a.s << " (" << r.v << ") >= v at s=" << b.s << " (" << b.v(n) << ")";
        out.push_back({n, n, a.s, b.s, os.str()});
      }
    }
  }
  return out;
}

SetStats set_stats(const IntSet& set, long lo, long hi) {
  SetStats st;
  for (long n : set) {
    if (n < lo || n > hi) continue;
    ++st.members_in_range;
    if (n % 2 != 0) ++st.odd_members;
  }
  const long width = hi >= lo ? hi - lo + 1 : 0;
  st.coverage_percent = width > 0 ? 100.0 * st.members_in_range / width : 0.0;
  if (st.members_in_range > 0) st.odd_percent = 100.0 * st.odd_members / st.members_in_range;
  return st;
}

IntSet magic_numbers(const ConvexityReport& report) {
  if (report.s != 0.0) throw DomainError("magic_numbers: report must be for s = 0");
  return report.c_plus;
}

}  // namespace riesz
