#pragma once

#include <map>
#include <utility>

#include "riesz/table.hpp"

namespace riesz {

// 1/2 + ln(1/2)
inline constexpr double kWLog = -0.19314718055994530942;
inline constexpr double kCLog = -0.05560530494339251850;
inline constexpr double kC2 = -0.08576841030090;

// Coefficients of the optimal total log-energy a N^2 + b N ln N + c N.
double log_expansion_a();
double log_expansion_b();
// ln(2 (2/3)^{1/4} pi^{3/4} / Gamma(1/3)^{3/2}); conjectured.
double log_expansion_c();

// 2^{1-s}/(2-s), analytically continued; pole at s = 2.
double w_s(double s);
double w_log();

// u = v + (1 - W_s)/s, and u = v - W_log at s = 0.
double u_from_v(double s, long n, double v);
double v_from_u(double s, long n, double u);

// Two-sided band for u_s(N) with caller-chosen constants C > c > 0.
std::pair<double, double> u_band(double s, long n, double c_const, double C_const);

struct LeadingTerm {
  double value = 0.0;
  bool cs_term_included = false;  // false means the C_s contribution was omitted
};

LeadingTerm u_leading(double s, long n);
LeadingTerm ddu_leading(double s, long n);

// Subtracts the N-dependent leading term: s in (2,4) or s = 2.
double tilde_u_leading(double s, long n, double u_val);
// Coefficient (sqrt(3)/(8 pi))^{s/2} zeta_hexagonal(s), s in (2,4).
double readjust_lattice_coefficient(double s);

double log_energy_expansion(long n);

// Omega_s(N) = u(N) - u_leading(s, N).  With table_holds_u = false the rows are v-values.
std::map<long, double> residual_omega(double s, const EnergyTable& table, bool table_holds_u = false);

}  // namespace riesz
