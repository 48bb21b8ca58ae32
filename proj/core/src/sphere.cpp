#include "riesz/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "riesz/asymptotics.hpp"
#include "riesz/errors.hpp"

namespace riesz {

double Vec3::norm() const { return std::sqrt(dot(*this)); }

Vec3 Vec3::normalized() const {
  const double n = norm();
  if (!(n > 0.0)) throw DomainError("cannot normalize the zero vector");
  return {x / n, y / n, z / n};
}

double chordal_distance(const UnitVector& p, const UnitVector& q) {
  return std::sqrt(std::clamp(2.0 - 2.0 * p.dot(q), 0.0, 4.0));
}

double pair_energy(RieszExponent s, double r) {
  if (r < 0.0 || std::isnan(r)) throw DomainError("pair_energy: negative distance");
  const double sv = s.value();
  if (r == 0.0) return sv < 0.0 ? -1.0 / sv : kInfinity;
  const double lnr = std::log(r);
  if (s.is_log()) return -lnr;
  const double x = -sv * lnr;
  if (std::fabs(sv) < kLogBranchThreshold) {
    if (x == 0.0) return -lnr;
    return -lnr * (std::expm1(x) / x);
  }
  return std::expm1(x) / sv;
}

namespace {

void check_n(const Configuration& c, std::size_t min_n) {
  if (c.n() < min_n) throw DomainError("configuration needs at least " + std::to_string(min_n) + " points");
}

void check_index(const Configuration& c, std::size_t l) {
  if (l >= c.n()) throw std::out_of_range("point index " + std::to_string(l) + " out of range");
}

// Constant U_s - V_s (plus the re-adjustment for s >= 2).
double adjust_offset(double s, long n) {
  if (s == 0.0) return -w_log();
  if (s < 2.0) return (1.0 - w_s(s)) / s;
  if (s >= 4.0) throw UnsupportedRange("adjusted energy is not defined for s >= 4");
  if (n <= 0) throw DomainError("re-adjusted energy needs N for s >= 2");
  const double N = static_cast<double>(n);
  if (s == 2.0) return 0.5 * (1.0 - kC2 - 0.25 * std::log(N));
  return (1.0 - w_s(s) - readjust_lattice_coefficient(s) * std::pow(N, 0.5 * s - 1.0)) / s;
}

}  // namespace

EnergyValue average_pair_energy(RieszExponent s, const Configuration& c) {
  check_n(c, 2);
  const std::size_t n = c.n();
  long double sum = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double e = pair_energy(s, chordal_distance(c[i], c[j]));
      if (std::isinf(e)) return kInfinity;
      sum += e;
    }
  }
  return static_cast<double>(2.0L * sum / (static_cast<long double>(n) * (n - 1)));
}

double adjusted_pair_energy(RieszExponent s, double r, long n_for_readjust) {
  if (r < 0.0) throw DomainError("adjusted_pair_energy: negative distance");
  const double off = adjust_offset(s.value(), n_for_readjust);
  return pair_energy(s, r) + off;
}

EnergyValue average_adjusted_energy(RieszExponent s, const Configuration& c) {
  const double off = adjust_offset(s.value(), static_cast<long>(c.n()));
  return average_pair_energy(s, c) + off;
}

double potential_field(RieszExponent s, const Configuration& c, const UnitVector& x) {
  check_n(c, 1);
  long double sum = 0.0L;
  for (const auto& q : c.points) {
    const double e = pair_energy(s, chordal_distance(x, q));
    if (std::isinf(e)) return kInfinity;
    sum += e;
  }
  return static_cast<double>(sum / static_cast<long double>(c.n()));
}

double point_energy(RieszExponent s, const Configuration& c, std::size_t l) {
  check_n(c, 2);
  check_index(c, l);
  long double sum = 0.0L;
  for (std::size_t j = 0; j < c.n(); ++j) {
    if (j == l) continue;
    const double e = pair_energy(s, chordal_distance(c[l], c[j]));
    if (std::isinf(e)) return kInfinity;
    sum += e;
  }
  return static_cast<double>(sum / static_cast<long double>(c.n() - 1));
}

Configuration remove_point(const Configuration& c, std::size_t l) {
  check_index(c, l);
  Configuration out = c;
  out.points.erase(out.points.begin() + static_cast<std::ptrdiff_t>(l));
  return out;
}

Configuration add_point(const Configuration& c, const UnitVector& q) {
  Configuration out = c;
  out.points.push_back(q);
  return out;
}

double master_identity_residual(RieszExponent s, const Configuration& c, std::size_t l) {
  check_n(c, 3);
  check_index(c, l);
  const double N = static_cast<double>(c.n());
  const double whole = average_pair_energy(s, c);
  const double rest = average_pair_energy(s, remove_point(c, l));
  return whole - ((N - 2.0) / N * rest + 2.0 / N * point_energy(s, c, l));
}

std::vector<Vec3> energy_gradient(RieszExponent s, const Configuration& c) {
  check_n(c, 2);
  const std::size_t n = c.n();
  const double f = 2.0 / (static_cast<double>(n) * (n - 1));
  const double sv = s.value();
  std::vector<Vec3> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec3 d = c[i] - c[j];
      const double r2 = d.dot(d);
      if (r2 == 0.0) throw DomainError("energy_gradient: coincident points");
      const double w = std::pow(r2, -0.5 * sv - 1.0);
      g[i] = g[i] - d * (f * w);
      g[j] = g[j] + d * (f * w);
    }
  }
  for (std::size_t i = 0; i < n; ++i) g[i] = g[i] - c[i] * g[i].dot(c[i]);
  return g;
}

double convert_energy(RieszExponent s, long n, double value, Conversion direction) {
  if (n < 2) throw DomainError("convert_energy: n >= 2");
  const double pairs = 0.5 * static_cast<double>(n) * (n - 1);
  const double sv = s.value();
  if (direction == Conversion::conventional_to_standardized) {
    if (s.is_log()) return value / pairs;
    return (value / pairs - 1.0) / sv;
  }
  if (s.is_log()) return value * pairs;
  return pairs * (sv * value + 1.0);
}

double separation(const Configuration& c) {
  check_n(c, 2);
  double best = kInfinity;
  for (std::size_t i = 0; i < c.n(); ++i)
    for (std::size_t j = i + 1; j < c.n(); ++j) best = std::min(best, chordal_distance(c[i], c[j]));
  return best;
}

double large_s_packing_functional(RieszExponent s, const Configuration& c) {
  check_n(c, 2);
  const double sv = s.value();
  if (!(sv > 0.0)) throw DomainError("large_s_packing_functional: s must be positive");
  // [<V_s> + 1/s]^{-1/s} = [mean(r^-s)/s]^{-1/s}, evaluated in log space.
  std::vector<double> t;
  t.reserve(c.n() * (c.n() - 1) / 2);
  for (std::size_t i = 0; i < c.n(); ++i) {
    for (std::size_t j = i + 1; j < c.n(); ++j) {
      const double r = chordal_distance(c[i], c[j]);
      if (r == 0.0) throw DomainError("large_s_packing_functional: coincident points");
      t.push_back(-sv * std::log(r));
    }
  }
  const double mx = *std::max_element(t.begin(), t.end());
  long double acc = 0.0L;
  for (double v : t) acc += std::exp(static_cast<long double>(v - mx));
  const double log_mean = mx + std::log(static_cast<double>(acc)) - std::log(static_cast<double>(t.size()));
  const double log_bracket = log_mean - std::log(sv);
  return std::exp(-log_bracket / sv);
}

namespace {

inline double kernel(double s, double r2, double& w) {
  // returns V_s(r) and sets w = r^{-s-2}
  if (s == 0.0) {
    w = 1.0 / r2;
    return -0.5 * std::log(r2);
  }
  if (std::fabs(s) < 1e-3) {
    const double lr = std::log(r2);
    const double x = std::exp(-0.5 * s * lr);
    w = x / r2;
    return std::expm1(-0.5 * s * lr) / s;
  }
  const double x = std::pow(r2, -0.5 * s);
  w = x / r2;
  return (x - 1.0) / s;
}

}  // namespace

double energy_and_gradient(double s, const std::vector<double>& xyz, std::vector<double>& grad) {
  const std::size_t n = xyz.size() / 3;
  grad.assign(xyz.size(), 0.0);
  const double f = 2.0 / (static_cast<double>(n) * (n - 1));
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = xyz[3 * i], yi = xyz[3 * i + 1], zi = xyz[3 * i + 2];
    double gx = 0.0, gy = 0.0, gz = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = xi - xyz[3 * j], dy = yi - xyz[3 * j + 1], dz = zi - xyz[3 * j + 2];
      const double r2 = dx * dx + dy * dy + dz * dz;
      if (r2 == 0.0) {
        if (s >= 0.0) return kInfinity;
        sum += -1.0 / s;
        continue;
      }
      double w;
      sum += kernel(s, r2, w);
      gx -= w * dx;
      gy -= w * dy;
      gz -= w * dz;
      grad[3 * j] += w * dx;
      grad[3 * j + 1] += w * dy;
      grad[3 * j + 2] += w * dz;
    }
    grad[3 * i] += gx;
    grad[3 * i + 1] += gy;
    grad[3 * i + 2] += gz;
  }
  for (std::size_t i = 0; i < n; ++i) {
    double* g = &grad[3 * i];
    const double* q = &xyz[3 * i];
    g[0] *= f;
    g[1] *= f;
    g[2] *= f;
    const double p = g[0] * q[0] + g[1] * q[1] + g[2] * q[2];
    g[0] -= p * q[0];
    g[1] -= p * q[1];
    g[2] -= p * q[2];
  }
  return f * sum;
}

double energy_flat(double s, const std::vector<double>& xyz) {
  const std::size_t n = xyz.size() / 3;
  const double f = 2.0 / (static_cast<double>(n) * (n - 1));
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = xyz[3 * i] - xyz[3 * j], dy = xyz[3 * i + 1] - xyz[3 * j + 1],
                   dz = xyz[3 * i + 2] - xyz[3 * j + 2];
      const double r2 = dx * dx + dy * dy + dz * dz;
      if (r2 == 0.0) {
        if (s >= 0.0) return kInfinity;
        sum += -1.0 / s;
        continue;
      }
      double w;
      sum += kernel(s, r2, w);
    }
  }
  return f * sum;
}

}  // namespace riesz
