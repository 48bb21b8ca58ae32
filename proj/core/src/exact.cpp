#include "riesz/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "riesz/errors.hpp"
#include "riesz/roots.hpp"

namespace riesz {

namespace {

constexpr double kPi = std::numbers::pi;

struct Term {
  double c;
  double r;
};
using Spectrum = std::vector<Term>;

// Pair-distance distributions; coefficients are pair fractions.
Spectrum spectrum_v(int n) {
  const double s2 = std::sqrt(2.0);
  switch (n) {
    case 2: return {{1.0, 2.0}};
    case 3: return {{1.0, std::sqrt(3.0)}};
    case 4: return {{1.0, std::sqrt(8.0 / 3.0)}};
    case 5: return {{0.1, 2.0}, {0.6, s2}, {0.3, std::sqrt(3.0)}};
    case 6: return {{0.2, 2.0}, {0.8, s2}};
    case 7:
      return {{1.0 / 21.0, 2.0},
              {10.0 / 21.0, s2},
              {5.0 / 21.0, 2.0 * std::sin(kPi / 5.0)},
              {5.0 / 21.0, 2.0 * std::sin(2.0 * kPi / 5.0)}};
    default: throw WindowError("no closed form for N=" + std::to_string(n));
  }
}

Spectrum spectrum_square_pyramid(double z) {
  return {{0.4, std::sqrt(2.0 * (1.0 - z))},
          {0.4, std::sqrt(2.0 * (1.0 - z * z))},
          {0.2, std::sqrt(4.0 * (1.0 - z * z))}};
}

Spectrum combine(const Spectrum& a, double wa, const Spectrum& b, double wb, const Spectrum& c, double wc) {
  Spectrum out;
  for (const auto& t : a) out.push_back({wa * t.c, t.r});
  for (const auto& t : b) out.push_back({wb * t.c, t.r});
  for (const auto& t : c) out.push_back({wc * t.c, t.r});
  return out;
}

// Sum of c * V_s(r) with sum c = 1.
double eval_average(const Spectrum& sp, double s) {
  double acc = 0.0;
  for (const auto& t : sp) acc += t.c * pair_energy(s, t.r);
  return acc;
}

// Sum of c * V_s(r) with sum c = 0, so the -1/s parts cancel analytically.
double eval_balanced(const Spectrum& sp, double s) {
  double acc = 0.0;
  if (s == 0.0) {
    for (const auto& t : sp) acc -= t.c * std::log(t.r);
    return acc;
  }
  if (std::fabs(s) < 1.0) {
    for (const auto& t : sp) acc += t.c * pair_energy(s, t.r);
    return acc;
  }
  for (const auto& t : sp) acc += t.c * std::pow(t.r, -s);
  return acc / s;
}

Spectrum spectrum_ddv(int n) { return combine(spectrum_v(n - 1), 1.0, spectrum_v(n), -2.0, spectrum_v(n + 1), 1.0); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

double bipyramid_minus_pyramid(double s) {
  // s * (v_bipyramid - v_pyramid); the -1 terms cancel.
  double acc = 0.0;
  for (const auto& t : spectrum_v(5)) acc += t.c * std::pow(t.r, -s);
  for (const auto& t : spectrum_square_pyramid(square_pyramid_height(s))) acc -= t.c * std::pow(t.r, -s);
  return acc;
}

}  // namespace

std::string to_string(ShapeKind k) {
  switch (k) {
    case ShapeKind::antipodal: return "antipodal";
    case ShapeKind::equilateral_triangle: return "equilateral_triangle";
    case ShapeKind::tetrahedron: return "tetrahedron";
    case ShapeKind::triangular_bipyramid: return "triangular_bipyramid";
    case ShapeKind::square_pyramid: return "square_pyramid";
    case ShapeKind::octahedron: return "octahedron";
    case ShapeKind::pentagonal_bipyramid: return "pentagonal_bipyramid";
    case ShapeKind::cube: return "cube";
    case ShapeKind::square_antiprism: return "square_antiprism";
    case ShapeKind::icosahedron: return "icosahedron";
  }
  return "unknown";
}

std::size_t shape_size(ShapeKind k) {
  switch (k) {
    case ShapeKind::antipodal: return 2;
    case ShapeKind::equilateral_triangle: return 3;
    case ShapeKind::tetrahedron: return 4;
    case ShapeKind::triangular_bipyramid: return 5;
    case ShapeKind::square_pyramid: return 5;
    case ShapeKind::octahedron: return 6;
    case ShapeKind::pentagonal_bipyramid: return 7;
    case ShapeKind::cube: return 8;
    case ShapeKind::square_antiprism: return 8;
    case ShapeKind::icosahedron: return 12;
  }
  return 0;
}

namespace {

void ring(std::vector<UnitVector>& out, int count, double z, double phase) {
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  for (int k = 0; k < count; ++k) {
    const double phi = phase + 2.0 * kPi * k / count;
    out.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
  }
}

}  // namespace

Configuration realize(const NamedShape& shape) {
  const bool needs = shape.kind == ShapeKind::square_pyramid;
  if (needs != shape.parameter.has_value())
    throw DomainError("realize: parameter is required for square_pyramid and only there");
  std::vector<UnitVector> p;
  const UnitVector north{0, 0, 1}, south{0, 0, -1};
  switch (shape.kind) {
    case ShapeKind::antipodal:
      p = {north, south};
      break;
    case ShapeKind::equilateral_triangle:
      ring(p, 3, 0.0, 0.0);
      break;
    case ShapeKind::tetrahedron:
      p.push_back(north);
      ring(p, 3, -1.0 / 3.0, 0.0);
      break;
    case ShapeKind::triangular_bipyramid:
      p = {north, south};
      ring(p, 3, 0.0, 0.0);
      break;
    case ShapeKind::square_pyramid: {
      const double z = *shape.parameter;
      if (!(z > -1.0 && z < 0.0)) throw DomainError("square pyramid base height must lie in (-1,0)");
      p.push_back(north);
      ring(p, 4, z, 0.0);
      break;
    }
    case ShapeKind::octahedron:
      p = {north, south, {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
      break;
    case ShapeKind::pentagonal_bipyramid:
      p = {north, south};
      ring(p, 5, 0.0, 0.0);
      break;
    case ShapeKind::cube: {
      const double a = 1.0 / std::sqrt(3.0);
      for (int sx : {1, -1})
        for (int sy : {1, -1})
          for (int sz : {1, -1}) p.push_back({sx * a, sy * a, sz * a});
      break;
    }
    case ShapeKind::square_antiprism: {
      // all edges equal: sqrt(2) rho^2 = 4 h^2, rho^2 + h^2 = 1
      const double rho2 = 1.0 / (1.0 + 1.0 / (2.0 * std::sqrt(2.0)));
      const double h = std::sqrt(1.0 - rho2);
      ring(p, 4, h, 0.0);
      ring(p, 4, -h, kPi / 4.0);
      break;
    }
    case ShapeKind::icosahedron: {
      const double z = 1.0 / std::sqrt(5.0);
      p.push_back(north);
      ring(p, 5, z, 0.0);
      ring(p, 5, -z, kPi / 5.0);
      p.push_back(south);
      break;
    }
  }
  return Configuration(std::move(p));
}

bool ValidityWindow::contains(double s) const {
  const bool lo_ok = lo_closed ? s >= s_lo : s > s_lo;
  const bool hi_ok = hi_closed ? s <= s_hi : s < s_hi;
  return lo_ok && hi_ok;
}

std::vector<ValidityWindow> validity_windows(int n) {
  const double inf = kInfinity;
  const double sd = s_dagger();
  switch (n) {
    case 2: return {{-2.0, inf, false, false, ShapeKind::antipodal, "antipodal pair"}};
    case 3: return {{-2.0, inf, false, false, ShapeKind::equilateral_triangle, "equilateral triangle"}};
    case 4: return {{-2.0, inf, false, false, ShapeKind::tetrahedron, "regular tetrahedron"}};
    case 5:
      return {{-2.0, sd, false, true, ShapeKind::triangular_bipyramid, "triangular bipyramid"},
              {sd, inf, false, false, ShapeKind::square_pyramid, "square pyramid, adjusted height"}};
    case 6: return {{-2.0, inf, false, false, ShapeKind::octahedron, "regular octahedron"}};
    case 7:
      return {{-2.0, 0.0, false, false, std::nullopt, "C2 family, no coordinates"},
              {0.0, 2.0, true, true, ShapeKind::pentagonal_bipyramid, "pentagonal bipyramid"},
              {2.0, 5.0, false, true, std::nullopt, "C2 family, no coordinates"},
              {5.0, 5.5979, false, true, std::nullopt, "C2v family, no coordinates"},
              {5.5979, inf, false, false, std::nullopt, "C3v family, no coordinates"}};
    default: throw WindowError("no validity windows recorded for N=" + std::to_string(n));
  }
}

std::string to_string(WindowTag t) {
  switch (t) {
    case WindowTag::exact: return "exact";
    case WindowTag::upper_bound: return "upper_bound";
    case WindowTag::lower_bound: return "lower_bound";
  }
  return "unknown";
}

WindowedValue exact_v(int n, RieszExponent s) {
  const double sv = s.value();
  if (n < 2 || n > 7) throw WindowError("exact_v: no closed form for N=" + std::to_string(n));
  if (!(sv > -2.0))
    throw WindowError("exact_v: s <= -2 is outside the closed-form windows; use v_minus_two or v_subcritical_even");
  for (const auto& w : validity_windows(n)) {
    if (!w.contains(sv)) continue;
    if (!w.shape)
      throw WindowError("exact_v: N=" + std::to_string(n) + ", s=" + fmt(sv) + " lies in the window '" + w.description +
                        "' (" + fmt(w.s_lo) + ", " + fmt(w.s_hi) + ")");
    const std::string tag = w.description;
    if (*w.shape == ShapeKind::square_pyramid) return {square_pyramid_energy(sv), WindowTag::exact, tag};
    return {eval_average(spectrum_v(n), sv), WindowTag::exact, tag};
  }
  throw WindowError("exact_v: no window contains s=" + fmt(sv));
}

double v_minus_two(long n) {
  if (n < 2) throw DomainError("v_minus_two: n >= 2");
  const double N = static_cast<double>(n);
  return -0.5 * (N + 1.0) / (N - 1.0);
}

double ddv_minus_two(long n) {
  if (n < 3) throw DomainError("ddv_minus_two: n >= 3");
  const double N = static_cast<double>(n);
  return -2.0 / ((N - 2.0) * (N - 1.0) * N);
}

double v_subcritical_even(double s, long n) {
  if (!(s < -2.0)) throw DomainError("v_subcritical_even: s < -2 required");
  if (n < 2 || n % 2 != 0) throw DomainError("v_subcritical_even: only even N is settled");
  const double a = -s;
  const double N = static_cast<double>(n);
  return -(1.0 / a) * ((std::exp2(a - 1.0) - 1.0) * N + 1.0) / (N - 1.0);
}

WindowedValue exact_ddv(int n, RieszExponent s) {
  const double sv = s.value();
  const double sd = s_dagger();
  auto val = [&](WindowTag tag, std::string w) { return WindowedValue{eval_balanced(spectrum_ddv(n), sv), tag, w}; };
  switch (n) {
    case 3:
      if (sv >= -2.0) return val(WindowTag::exact, "[-2, inf)");
      break;
    case 4:
      if (sv > -2.0 && sv <= sd) return val(WindowTag::exact, "(-2, s_dagger]");
      if (sv > sd) return val(WindowTag::upper_bound, "(s_dagger, inf): bipyramid is not optimal");
      break;
    case 5:
      if (sv > -2.0 && sv <= sd) return val(WindowTag::exact, "(-2, s_dagger]");
      if (sv > sd) return val(WindowTag::lower_bound, "(s_dagger, inf): bipyramid trial configuration");
      break;
    case 6:
      if (sv >= 0.0 && sv <= 2.0) return val(WindowTag::exact, "[0, 2]");
      if (sv > -2.0) return val(WindowTag::upper_bound, "outside [0,2]: pentagonal bipyramid trial configuration");
      break;
    default: throw WindowError("exact_ddv: no closed form for N=" + std::to_string(n));
  }
  throw WindowError("exact_ddv: s=" + fmt(sv) + " outside every window for N=" + std::to_string(n));
}

namespace {

double newton_residual(double s, double z) { return std::pow(1.0 + z, 1.0 + 0.5 * s) + (2.0 + std::exp2(-0.5 * s)) * z; }

std::vector<double> newton_trace(double s, double tol) {
  if (!(s > 2.0)) throw DomainError("square_pyramid_height: the Newton branch needs s > 2");
  if (!(tol > 0.0)) throw DomainError("square_pyramid_height: tol must be positive");
  const double c = 2.0 + std::exp2(-0.5 * s);
  std::vector<double> zs{0.0};
  double z = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double f = newton_residual(s, z);
    if (std::fabs(f) <= tol) return zs;
    const double df = (1.0 + 0.5 * s) * std::pow(1.0 + z, 0.5 * s) + c;
    const double next = z - f / df;
    if (!(next > -1.0 && next < 0.0) || next == z) break;
    z = next;
    zs.push_back(z);
  }
  // bisection fallback on (-1, 0)
  double a = -1.0, b = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    const double f = newton_residual(s, m);
    if (std::fabs(f) <= tol || b - a < 1e-17) {
      zs.push_back(m);
      return zs;
    }
    (f > 0.0 ? b : a) = m;
  }
  throw NumericError("square_pyramid_height: no convergence");
}

}  // namespace

std::vector<double> square_pyramid_newton_iterates(double s, double tol) { return newton_trace(s, tol); }

double square_pyramid_height(double s, double tol) { return newton_trace(s, tol).back(); }

double square_pyramid_energy(double s) {
  return eval_average(spectrum_square_pyramid(square_pyramid_height(s)), s);
}

double ScaledReal::value() const { return mantissa * std::exp2(exponent2); }

ScaledReal ddv5_square_pyramid_branch(double s) {
  Spectrum sp = combine(spectrum_v(4), 1.0, spectrum_square_pyramid(square_pyramid_height(s)), -2.0, spectrum_v(6), 1.0);
  std::vector<double> e2;
  double top = -kInfinity;
  for (const auto& t : sp) {
    e2.push_back(-s * std::log2(t.r));
    top = std::max(top, e2.back());
  }
  double m = 0.0;
  for (std::size_t k = 0; k < sp.size(); ++k) m += sp[k].c * std::exp2(e2[k] - top);
  return {m / s, top};
}

double ddv12_upper_bound(double s) {
  const double sn = std::sin(2.0 * kPi / 5.0);
  const double A = (3.0 + std::sqrt(5.0)) / (2.0 * std::sqrt(3.0) * sn);
  const double B = (5.0 + std::sqrt(5.0)) / (8.0 * sn * sn);
  const double t = 1.0 / (std::sqrt(3.0) * sn);
  const Spectrum face = {
      {1.0 / 26.0, std::sqrt(1.0 - A + B)},
      {1.0 / 26.0, std::sqrt(1.0 + A + B)},
      {1.0 / 26.0, 2.0 * std::sin(0.5 * std::acos(t) + 0.5 * std::atan(0.5))},
      {1.0 / 26.0, 2.0 * std::sin(0.5 * std::asin(t) + 0.5 * std::atan(2.0))},
  };
  const Spectrum ico = {
      {-10.0 / 143.0, 1.0 / sn},
      {-10.0 / 143.0, std::sqrt(4.0 * sn * sn - 1.0) / sn},
      {-2.0 / 143.0, 2.0},
  };
  Spectrum all = face;
  all.insert(all.end(), ico.begin(), ico.end());
  return eval_balanced(all, s);
}

double s_dagger() {
  static const double value = bracketed_root(bipyramid_minus_pyramid, 14.0, 16.0, 1e-13);
  return value;
}

double find_critical_s(CriticalTarget target, double tol, long n) {
  if (!(tol > 0.0)) throw DomainError("find_critical_s: tol must be positive");
  auto ddv = [](int k) { return [k](double s) { return eval_balanced(spectrum_ddv(k), s); }; };
  switch (target) {
    case CriticalTarget::s1_of_3: return first_root(ddv(3), -1.999, 10.0, 0.01, tol);
    case CriticalTarget::s1_of_4: return first_root(ddv(4), -1.999, 2.0, 0.01, tol);
    case CriticalTarget::s1_of_6: return first_root(ddv(6), -1.999, 0.0, 0.01, tol);
    case CriticalTarget::s_dagger: return bracketed_root(bipyramid_minus_pyramid, 14.0, 16.0, tol);
    case CriticalTarget::s3_crossover: {
      if (n < 3 || n % 2 == 0 || n % 3 != 0)
        throw DomainError("s3_crossover: N must be an odd multiple of 3");
      const double N = static_cast<double>(n);
      // (N^2-1)/4 antipodal pairs at distance 2 against N^2/3 pairs at distance sqrt(3)
      return -2.0 * std::log(4.0 * N * N / (3.0 * (N * N - 1.0))) / std::log(4.0 / 3.0);
    }
  }
  throw DomainError("find_critical_s: unknown target");
}

}  // namespace riesz
