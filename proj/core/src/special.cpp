#include "riesz/special.hpp"

#include <array>
#include <cmath>
#include <string>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

constexpr int kHead = 50;
// B_{2j} / (2j)! for j = 1..8.
constexpr std::array<double, 8> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
};

}  // namespace

double hurwitz_zeta(double x, double a) {
  if (!(x > 1.0)) throw UnsupportedRange("hurwitz_zeta: x must exceed 1, got " + std::to_string(x));
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta: a must lie in (0,1]");

  double head = 0.0;
  for (int k = kHead - 1; k >= 0; --k) head += std::pow(k + a, -x);

  const double m = kHead + a;
  double tail = std::pow(m, 1.0 - x) / (x - 1.0) + 0.5 * std::pow(m, -x);
  // rising factorial x (x+1) ... (x+2j-2) times m^{-x-2j+1}
  double rising = x;
  double mpow = std::pow(m, -x - 1.0);
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    tail += kBernoulliOverFactorial[j] * rising * mpow;
    rising *= (x + 2.0 * j + 1.0) * (x + 2.0 * j + 2.0);
    mpow /= m * m;
  }
  return head + tail;
}

double riemann_zeta(double x) { return hurwitz_zeta(x, 1.0); }

double dirichlet_L3(double x) {
  return std::pow(3.0, -x) * (hurwitz_zeta(x, 1.0 / 3.0) - hurwitz_zeta(x, 2.0 / 3.0));
}

double zeta_hexagonal(double s) {
  if (!(s > 2.0)) throw UnsupportedRange("zeta_hexagonal: s must exceed 2");
  return 6.0 * riemann_zeta(0.5 * s) * dirichlet_L3(0.5 * s);
}

CsDiagnostic c_s_conjectured(double s) {
  if (s > 2.0) {
    const double v = std::pow(std::sqrt(3.0) / 2.0, 0.5 * s) * zeta_hexagonal(s);
    return {v, v > 0 ? 1 : (v < 0 ? -1 : 0)};
  }
  if (s > 0.0 && s < 2.0) return {std::nullopt, -1};
  throw UnsupportedRange("c_s_conjectured: no value or sign outside (0,2) and (2,inf)");
}

}  // namespace riesz
