#include "riesz/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "riesz/errors.hpp"
#include "riesz/special.hpp"

namespace riesz {

double log_expansion_a() { return 0.25 * std::log(std::numbers::e / 4.0); }

double log_expansion_b() { return -0.25; }

double log_expansion_c() {
  const double pi = std::numbers::pi;
  return std::log(2.0) + 0.25 * std::log(2.0 / 3.0) + 0.75 * std::log(pi) - 1.5 * std::lgamma(1.0 / 3.0);
}

double w_s(double s) {
  if (s == 2.0) throw DomainError("w_s: pole at s = 2");
  return std::exp2(1.0 - s) / (2.0 - s);
}

double w_log() { return 0.5 + std::log(0.5); }

double u_from_v(double s, long, double v) {
  if (s == 2.0) throw DomainError("u_from_v: s = 2 needs the re-adjusted branch");
  if (s == 0.0) return v - w_log();
  // (1 - W_s)/s without the cancellation near s = 0
  return v - (2.0 * std::expm1(-s * std::numbers::ln2) / s + 1.0) / (2.0 - s);
}

double v_from_u(double s, long n, double u) { return u - (u_from_v(s, n, 0.0)); }

std::pair<double, double> u_band(double s, long n, double c_const, double C_const) {
  if (!(C_const > c_const && c_const > 0.0)) throw DomainError("u_band: need C > c > 0");
  if (!(s > -2.0 && s < 2.0)) throw DomainError("u_band: s must lie in (-2,2)");
  const double N = static_cast<double>(n);
  if (s == 0.0) {
    // from -C N <= E_log - W_log N^2 + (N/2) ln N <= -c N
    const double base = w_log() - 0.5 * std::log(N);
    return {(base - C_const) / (N - 1.0), (base - c_const) / (N - 1.0)};
  }
  const double ws = w_s(s);
  const double with_c = (ws - c_const * std::pow(N, 0.5 * s)) / (s * (N - 1.0));
  const double with_C = (ws - C_const * std::pow(N, 0.5 * s)) / (s * (N - 1.0));
  if (s < 0.0) return {with_c, with_C};
  return {with_C, with_c};
}

namespace {

// C_s / (4 pi)^{s/2} when a value exists.
bool lattice_term(double s, double& out) {
  if (s <= 2.0) return false;
  out = *c_s_conjectured(s).value / std::pow(4.0 * std::numbers::pi, 0.5 * s);
  return true;
}

}  // namespace

LeadingTerm u_leading(double s, long n) {
  const double N = static_cast<double>(n);
  if (s == 0.0) {
    const double k = kWLog + kCLog;
    const double ln = std::log(N);
    return {-0.5 * ln / N + k / N - 0.5 * ln / (N * N) + k / (N * N), true};
  }
  LeadingTerm t{w_s(s) / (s * N), false};
  double lat = 0.0;
  if (lattice_term(s, lat)) {
    t.value += lat * std::pow(N, 0.5 * s - 1.0) / s;
    t.cs_term_included = true;
  }
  return t;
}

LeadingTerm ddu_leading(double s, long n) {
  const double N = static_cast<double>(n);
  const double n3 = N * N * N;
  if (s == 0.0) return {(-std::log(N) + 1.5 + kWLog + kCLog) / n3, true};
  LeadingTerm t{2.0 * w_s(s) / (s * n3), false};
  double lat = 0.0;
  if (lattice_term(s, lat)) {
    t.value += (1.0 - 0.5 * s) * (2.0 - 0.5 * s) / s * lat * std::pow(N, 0.5 * s - 3.0);
    t.cs_term_included = true;
  }
  return t;
}

double readjust_lattice_coefficient(double s) {
  if (!(s > 2.0 && s < 4.0)) throw UnsupportedRange("re-adjusted branch needs s in (2,4)");
  return std::pow(std::sqrt(3.0) / (8.0 * std::numbers::pi), 0.5 * s) * zeta_hexagonal(s);
}

double tilde_u_leading(double s, long n, double u_val) {
  const double N = static_cast<double>(n);
  if (s == 2.0) return u_val - kC2 - 0.25 * std::log(N);
  return u_val - readjust_lattice_coefficient(s) * std::pow(N, 0.5 * s - 1.0);
}

double log_energy_expansion(long n) {
  if (n < 2) throw DomainError("log_energy_expansion: n >= 2");
  const double N = static_cast<double>(n);
  return log_expansion_a() * N * N + log_expansion_b() * N * std::log(N) + log_expansion_c() * N;
}

std::map<long, double> residual_omega(double s, const EnergyTable& table, bool table_holds_u) {
  std::map<long, double> out;
  for (const auto& [n, row] : table.rows) {
    const double u = table_holds_u ? row.v : u_from_v(s, n, row.v);
    out[n] = u - u_leading(s, n).value;
  }
  return out;
}

}  // namespace riesz
