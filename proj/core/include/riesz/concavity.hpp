#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "riesz/table.hpp"

namespace riesz {

using IntSet = std::set<long>;

double second_diff(const EnergyTable& table, long n);
// v(N+1) - v(N) and v(N) - v(N-1)
double forward_diff(const EnergyTable& table, long n);
double backward_diff(const EnergyTable& table, long n);

inline constexpr double kNoisyTableTol = 1e-10;

struct ConvexityReport {
  double s = 0.0;
  double tol = 0.0;
  long n_lo = 0;  // analyzable interior range
  long n_hi = 0;
  IntSet c_minus, c_zero, c_plus;
  std::map<long, double> ddv;
};

// Needs a contiguous table with at least three rows.
ConvexityReport convexity_sets(const EnergyTable& table, double tol = 0.0);

// +1 on b \ a, -1 on a \ b, 0 elsewhere in [lo, hi].
std::map<long, int> signed_indicator(const IntSet& a, const IntSet& b, long lo, long hi);

struct MonotonicityViolation {
  long n = 0;
  long earlier_n = 0;   // monotonicity_check_N: the earlier row that is not exceeded
  double s_lo = 0.0;    // monotonicity_check_s: the offending pair of exponents
  double s_hi = 0.0;
  std::string message;
};

// Flags every N whose value does not exceed all earlier rows.
std::vector<MonotonicityViolation> monotonicity_check_N(const EnergyTable& table);
// Tables ordered by increasing s; flags v_{s_i}(N) >= v_{s_{i+1}}(N).
std::vector<MonotonicityViolation> monotonicity_check_s(const std::vector<EnergyTable>& tables);

struct SetStats {
  std::size_t members_in_range = 0;
  std::size_t odd_members = 0;
  double coverage_percent = 0.0;
  // Empty when the set is empty.
  std::optional<double> odd_percent;
};

SetStats set_stats(const IntSet& set, long lo, long hi);

// c_plus of a report at s = 0.
IntSet magic_numbers(const ConvexityReport& report);

enum class Membership { member, non_member, unknown };

struct MagicCatalog {
  // Keyed by s in {-1, 0, 1, 2, 3}.
  std::map<int, IntSet> sets;
  bool pre_correction = false;
  long range_lo = 3;
  long range_hi = 199;

  const IntSet& at(int s) const;
  // unknown outside [range_lo, range_hi] or for an s without a stored set.
  Membership contains(int s, long n) const;
  // C(-1) subset C(0) subset ... subset C(3); lists the first failing pair when false.
  bool chain_holds(std::string* first_failure = nullptr) const;
};

// Printed sets with the later corrections (177, 197) in place; pre_correction drops them.
MagicCatalog magic_catalog(bool pre_correction = false);

// Difference sets as printed alongside the catalog.
IntSet printed_difference_1_0();
IntSet printed_difference_2_1();
IntSet printed_difference_3_2();

}  // namespace riesz
