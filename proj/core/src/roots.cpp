#include "riesz/roots.hpp"

#include <cmath>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

int sgn(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

double bracketed_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (sgn(fa) == sgn(fb) || std::isnan(fa) || std::isnan(fb))
    throw BracketError("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");

  while (b - a > 1e-3) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if (sgn(fm) == sgn(fa)) {
      a = m;
      fa = fm;
    } else {
      b = m;
      fb = fm;
    }
  }

  // Illinois variant of regula falsi.
  int side = 0;
  double x = 0.5 * (a + b);
  for (int it = 0; it < 200 && b - a > tol; ++it) {
    x = b - fb * (b - a) / (fb - fa);
    if (!(x > a && x < b)) x = 0.5 * (a + b);
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (sgn(fx) == sgn(fb)) {
      b = x;
      fb = fx;
      if (side == 1) fa *= 0.5;
      side = 1;
    } else {
      a = x;
      fa = fx;
      if (side == -1) fb *= 0.5;
      side = -1;
    }
    if (std::fabs(b - a) <= tol) break;
  }
  return std::fabs(fa) < std::fabs(fb) ? a : b;
}

double first_root(const std::function<double(double)>& f, double lo, double hi, double step, double tol) {
  double a = lo;
  double fa = f(a);
  while (a < hi) {
    const double b = std::fmin(a + step, hi);
    const double fb = f(b);
    if (fa == 0.0) return a;
    if (sgn(fa) != sgn(fb)) return bracketed_root(f, a, b, tol);
    a = b;
    fa = fb;
  }
  throw BracketError("no sign change found on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace riesz
