#include <gmpxx.h>

#include "riesz/errors.hpp"
#include "riesz/exact.hpp"

namespace riesz {

namespace {

Rational to_rational(mpq_class q) {
  q.canonicalize();
  return {q.get_num().get_str(), q.get_den().get_str(), q.get_d()};
}

// (a)_k / k!
mpq_class rising_over_factorial(const mpq_class& a, int k) {
  mpq_class r = 1;
  for (int j = 0; j < k; ++j) {
    r *= a + j;
    r /= j + 1;
  }
  return r;
}

mpq_class power(const mpq_class& x, int k) {
  mpq_class r = 1;
  for (int j = 0; j < k; ++j) r *= x;
  return r;
}

// Lower bound for sqrt(1 - x), 0 < x < 1: truncated binomial series minus a tail majorant.
mpq_class sqrt_one_minus_lower(const mpq_class& x, int K) {
  const mpq_class half(1, 2);
  mpq_class acc = 0;
  for (int k = 0; k < K; ++k) acc += rising_over_factorial(-half, k) * power(x, k);
  acc -= rising_over_factorial(half, K - 1) * power(x, K);
  return acc;
}

// Upper bound for sqrt(3/2) from the alternating series.
mpq_class sqrt_three_halves_upper(int K) {
  const mpq_class half(1, 2);
  mpq_class acc = 1;
  for (int k = 1; k < K; ++k) {
    mpq_class term = rising_over_factorial(-half, k) * power(half, k);
    if (k % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

// Squared distances (as rationals) of the rational spectra.
struct QTerm {
  mpq_class c;
  mpq_class r2;
};

std::vector<QTerm> qspectrum(int n) {
  switch (n) {
    case 2: return {{1, 4}};
    case 3: return {{1, 3}};
    case 4: return {{1, mpq_class(8, 3)}};
    case 5: return {{mpq_class(1, 10), 4}, {mpq_class(3, 5), 2}, {mpq_class(3, 10), 3}};
    case 6: return {{mpq_class(1, 5), 4}, {mpq_class(4, 5), 2}};
    default: throw WindowError("no rational spectrum for N=" + std::to_string(n));
  }
}

}  // namespace

Rational exact_ddv_rational(int n, int s_even) {
  if (n < 3 || n > 5) throw WindowError("exact_ddv_rational: N must be 3, 4 or 5");
  if (s_even == 0 || s_even % 2 != 0) throw DomainError("exact_ddv_rational: s must be a nonzero even integer");
  if (s_even < -2 || (s_even == -2 && n != 3))
    throw WindowError("exact_ddv_rational: s outside the closed-form window for N=" + std::to_string(n));
  const int half = s_even / 2;
  mpq_class acc = 0;
  auto add = [&](int m, int w) {
    for (const auto& t : qspectrum(m)) {
      // r^{-s} = (r^2)^{-s/2}
      mpq_class p = half > 0 ? 1 / power(t.r2, half) : power(t.r2, -half);
      acc += w * t.c * p;
    }
  };
  add(n - 1, 1);
  add(n, -2);
  add(n + 1, 1);
  acc /= s_even;
  return to_rational(acc);
}

Rational rational_positivity_certificate() {
  constexpr int K = 20;
  mpq_class r = mpq_class(1, 20) + mpq_class(13, 10) * sqrt_one_minus_lower(mpq_class(2, 3), K) +
                mpq_class(3, 5) * sqrt_one_minus_lower(mpq_class(1, 2), K) - sqrt_three_halves_upper(K);
  return to_rational(r);
}

}  // namespace riesz
