#pragma once

#include <functional>

namespace riesz {

// Bisection down to a bracket of width 1e-3, then safeguarded secant to |b - a| <= tol.
// Throws BracketError when f(lo) and f(hi) share a sign.
double bracketed_root(const std::function<double(double)>& f, double lo, double hi, double tol);

// Scans [lo, hi] with the given step and refines the first sign change.
double first_root(const std::function<double(double)>& f, double lo, double hi, double step, double tol);

}  // namespace riesz
