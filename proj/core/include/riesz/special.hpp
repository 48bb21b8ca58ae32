#pragma once

#include <optional>

namespace riesz {

// Euler-Maclaurin evaluation, series region x > 1 only.
double hurwitz_zeta(double x, double a);
double riemann_zeta(double x);
// L_{-3}(x) = 3^-x [zeta(x,1/3) - zeta(x,2/3)].
double dirichlet_L3(double x);

// Zeta function of the hexagonal lattice with unit minimal distance, s > 2.
double zeta_hexagonal(double s);

struct CsDiagnostic {
  std::optional<double> value;  // present for s > 2
  int sign = 0;                 // -1, 0 or +1; always set
};

// (sqrt(3)/2)^{s/2} zeta_hexagonal(s) for s > 2.  On (0,2) only the sign is reported.
CsDiagnostic c_s_conjectured(double s);

}  // namespace riesz
