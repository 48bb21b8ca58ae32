#include "riesz/nets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

constexpr int kBits = 52;

// Direction numbers scaled to 2^kBits.  Dimension 1: m_k = 1.  Dimension 2: polynomial x + 1, m_1 = 1,
// so m_k = 2 m_{k-1} xor m_{k-1}.
struct Directions {
  std::array<std::uint64_t, kBits> d1{}, d2{};
  Directions() {
    std::uint64_t m = 1;
    for (int k = 0; k < kBits; ++k) {
      d1[k] = std::uint64_t{1} << (kBits - 1 - k);
      if (k > 0) m = (m << 1) ^ m;
      d2[k] = m << (kBits - 1 - k);
    }
  }
};

int lowest_zero_bit(std::uint64_t i) {
  int c = 0;
  while (i & 1) {
    i >>= 1;
    ++c;
  }
  return c;
}

}  // namespace

UnitSquarePointSet sobol_points(std::size_t count, bool skip_zero) {
  if (count < 1) throw DomainError("sobol_points: count >= 1");
  static const Directions dir;
  const double scale = std::ldexp(1.0, -kBits);
  UnitSquarePointSet out;
  out.points.reserve(count);
  std::uint64_t x = 0, y = 0;
  std::uint64_t index = 0;
  if (!skip_zero) out.points.push_back({0.0, 0.0});
  while (out.points.size() < count) {
    const int c = lowest_zero_bit(index);
    if (c >= kBits) throw DomainError("sobol_points: sequence exhausted");
    x ^= dir.d1[c];
    y ^= dir.d2[c];
    ++index;
    out.points.push_back({static_cast<double>(x) * scale, static_cast<double>(y) * scale});
  }
  return out;
}

UnitVector lambert_lift(double u, double v) {
  const double z = std::clamp(1.0 - 2.0 * v, -1.0, 1.0);
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  if (rho == 0.0) return {0.0, 0.0, z};
  const double phi = 2.0 * std::numbers::pi * u;
  return {rho * std::cos(phi), rho * std::sin(phi), z};
}

SphericalNet lambert_lift(const UnitSquarePointSet& pts) {
  SphericalNet net;
  net.source = pts;
  net.config.points.reserve(pts.points.size());
  for (const auto& p : pts.points) net.config.points.push_back(lambert_lift(p[0], p[1]));
  return net;
}

EnergyTable net_energy_curve(RieszExponent s, std::size_t n_max, bool skip_zero) {
  if (n_max < 3) throw DomainError("net_energy_curve: n_max >= 3");
  const SphericalNet net = lambert_lift(sobol_points(n_max, skip_zero));
  const auto& p = net.config.points;
  EnergyTable t;
  t.s = s.value();
  t.label = kNetTableLabel;
  // running pair sum over prefixes
  long double sum = 0.0L;
  bool infinite = false;
  for (std::size_t n = 1; n < n_max; ++n) {
    for (std::size_t j = 0; j < n; ++j) {
      const double e = pair_energy(s, chordal_distance(p[n], p[j]));
      if (std::isinf(e)) infinite = true;
      else sum += e;
    }
    const double N = static_cast<double>(n + 1);
    const double v = infinite ? kInfinity : static_cast<double>(2.0L * sum / (N * (N - 1.0)));
    t.set(static_cast<long>(n + 1), v, skip_zero ? "sobol-lambert(skip-zero)" : "sobol-lambert");
  }
  return t;
}

}  // namespace riesz
