#include <doctest.h>

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <numbers>

#include "riesz/errors.hpp"
#include "riesz/exact.hpp"
#include "riesz/sphere.hpp"

using namespace riesz;
using doctest::Approx;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {

Configuration shape(ShapeKind k) { return realize({k, std::nullopt}); }

std::vector<double> distances(const Configuration& c) {
  std::vector<double> d;
  for (std::size_t i = 0; i < c.n(); ++i)
    for (std::size_t j = i + 1; j < c.n(); ++j) d.push_back((c[i] - c[j]).norm());
  std::sort(d.begin(), d.end());
  return d;
}

// (value, multiplicity) after merging values closer than tol
std::vector<std::pair<double, int>> multiset(const std::vector<double>& d, double tol = 1e-9) {
  std::vector<std::pair<double, int>> out;
  for (double x : d) {
    if (!out.empty() && std::fabs(out.back().first - x) < tol)
      ++out.back().second;
    else
      out.push_back({x, 1});
  }
  return out;
}

// ddv from three coordinate configurations, 50-digit pair sums
double ddv_from_coordinates(const Configuration& a, const Configuration& b, const Configuration& c, double s) {
  auto avg = [&](const Configuration& x) {
    big acc = 0;
    const big bs(s);
    for (double r : distances(x)) acc += s == 0.0 ? -log(big(r)) : (pow(big(r), -bs) - 1) / bs;
    return acc * 2 / (x.n() * (x.n() - 1));
  };
  return static_cast<double>(avg(a) - 2 * avg(b) + avg(c));
}

}  // namespace

TEST_CASE("realized shapes have the exact distance multisets") {
  auto oct = multiset(distances(shape(ShapeKind::octahedron)));
  REQUIRE(oct.size() == 2);
  CHECK(oct[0].first == Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(oct[0].second == 12);
  CHECK(oct[1].first == Approx(2.0).epsilon(1e-14));
  CHECK(oct[1].second == 3);

  auto ico = multiset(distances(shape(ShapeKind::icosahedron)));
  REQUIRE(ico.size() == 3);
  CHECK(ico[0].first == Approx(1.051462224238267).epsilon(1e-14));
  CHECK(ico[0].second == 30);
  CHECK(ico[1].second == 30);
  CHECK(ico[2].first == Approx(2.0).epsilon(1e-14));
  CHECK(ico[2].second == 6);

  auto tet = multiset(distances(shape(ShapeKind::tetrahedron)));
  REQUIRE(tet.size() == 1);
  CHECK(tet[0].first == Approx(std::sqrt(8.0 / 3.0)).epsilon(1e-14));

  auto cube = multiset(distances(shape(ShapeKind::cube)));
  REQUIRE(cube.size() == 3);
  CHECK(cube[0].second == 12);
  CHECK(cube[1].second == 12);
  CHECK(cube[2].second == 4);

  auto anti = multiset(distances(shape(ShapeKind::square_antiprism)));
  CHECK(anti[0].second == 16);  // all 16 edges equal

  for (int k = 0; k <= static_cast<int>(ShapeKind::icosahedron); ++k) {
    const auto kind = static_cast<ShapeKind>(k);
    NamedShape sh{kind, std::nullopt};
    if (kind == ShapeKind::square_pyramid) sh.parameter = -0.3;
    const auto c = realize(sh);
    CHECK(c.n() == shape_size(kind));
    for (const auto& p : c.points) CHECK(std::fabs(p.norm() - 1.0) <= 1e-15);
  }

  const auto pyr = realize({ShapeKind::square_pyramid, -0.25});
  CHECK(pyr[0] == UnitVector{0, 0, 1});
  for (std::size_t i = 1; i < 5; ++i) CHECK(pyr[i].z == -0.25);
  CHECK_THROWS_AS(realize({ShapeKind::square_pyramid, std::nullopt}), DomainError);
  CHECK_THROWS_AS(realize({ShapeKind::square_pyramid, 0.2}), DomainError);
  CHECK_THROWS_AS(realize({ShapeKind::octahedron, -0.2}), DomainError);
}

TEST_CASE("exact_v agrees with realized coordinates inside every window") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& w : validity_windows(n)) {
      if (!w.shape) continue;
      for (double s : {-1.9, -1.0, -0.3, 0.0, 0.5, 1.0, 2.0, 3.5, 10.0, 15.0, 16.0, 40.0}) {
        if (!w.contains(s)) continue;
        NamedShape sh{*w.shape, std::nullopt};
        if (*w.shape == ShapeKind::square_pyramid) sh.parameter = square_pyramid_height(s);
        const auto v = exact_v(n, s);
        CHECK(v.tag == WindowTag::exact);
        CHECK(v.value == Approx(average_pair_energy(s, realize(sh))).epsilon(1e-12));
      }
    }
  }
  CHECK(exact_v(4, 2).value == Approx(-5.0 / 16.0).epsilon(1e-15));
  CHECK(exact_v(2, 1).value == Approx(-0.5).epsilon(1e-15));
  CHECK(std::fabs(exact_v(6, 1e-9).value - exact_v(6, 0).value) <= 1e-7);
}

TEST_CASE("windows tile (-2, inf)") {
  for (int n = 2; n <= 7; ++n) {
    const auto ws = validity_windows(n);
    CHECK(ws.front().s_lo == -2.0);
    CHECK(std::isinf(ws.back().s_hi));
    for (std::size_t i = 0; i + 1 < ws.size(); ++i) {
      CHECK(ws[i].s_hi == ws[i + 1].s_lo);
      CHECK(!(ws[i].hi_closed && ws[i + 1].lo_closed));
    }
  }
}

TEST_CASE("out-of-window requests") {
  CHECK_THROWS_AS(exact_v(7, 3.0), WindowError);
  CHECK_THROWS_AS(exact_v(7, -1.0), WindowError);
  CHECK_THROWS_AS(exact_v(8, 1.0), WindowError);
  CHECK_THROWS_AS(exact_v(3, -2.0), WindowError);
  CHECK_THROWS_AS(exact_ddv(4, -2.0), WindowError);
  CHECK_THROWS_AS(exact_ddv(6, -2.5), WindowError);
  CHECK_THROWS_AS(exact_ddv(7, 1.0), WindowError);
  CHECK_NOTHROW(exact_v(7, 0.0));
  CHECK_NOTHROW(exact_v(7, 2.0));
  try {
    exact_v(7, 3.0);
  } catch (const WindowError& e) {
    CHECK(std::string(e.what()).find("C2") != std::string::npos);
  }
}

TEST_CASE("closed-form second differences") {
  CHECK(exact_ddv_rational(4, 2).str() == "1/240");
  CHECK(exact_ddv(4, 2).value == Approx(1.0 / 240.0).epsilon(1e-13));
  CHECK(exact_ddv_rational(3, 10).str() == "1289/79626240");
  CHECK(exact_ddv(3, 10).value == Approx(1289.0 / 79626240.0).epsilon(1e-12));
  CHECK(exact_ddv(3, -2).value == Approx(-1.0 / 3.0).epsilon(1e-14));
  CHECK(exact_ddv_rational(3, -2).str() == "-1/3");
  CHECK(std::fabs(exact_ddv(4, 1).value - 0.0000745467) <= 1e-9);
  CHECK(std::fabs(exact_ddv(6, 0).value - 0.000084098) <= 1e-8);
  CHECK(std::fabs(exact_ddv(3, -1).value + 0.168891546) <= 1e-8);

  // exact fractions computed independently
  const std::vector<std::tuple<int, int, const char*>> table = {
      {3, 2, "-1/48"},   {3, 4, "-11/2304"}, {3, 6, "-79/82944"}, {4, 4, "7/1440"},
      {4, 6, "133/41472"}, {5, 2, "-1/80"},  {5, 4, "-5/768"},    {5, 6, "-449/138240"}};
  for (const auto& [n, s, q] : table) CHECK(exact_ddv_rational(n, s).str() == q);
  CHECK_THROWS_AS(exact_ddv_rational(4, 3), DomainError);
  CHECK_THROWS_AS(exact_ddv_rational(4, 0), DomainError);
  CHECK_THROWS_AS(exact_ddv_rational(4, -2), WindowError);
}

TEST_CASE("window tags of exact_ddv") {
  const double sd = s_dagger();
  CHECK(exact_ddv(3, 50).tag == WindowTag::exact);
  CHECK(exact_ddv(4, sd).tag == WindowTag::exact);
  CHECK(exact_ddv(4, sd + 0.1).tag == WindowTag::upper_bound);
  CHECK(exact_ddv(5, 1).tag == WindowTag::exact);
  CHECK(exact_ddv(5, sd + 0.1).tag == WindowTag::lower_bound);
  CHECK(exact_ddv(6, 1).tag == WindowTag::exact);
  CHECK(exact_ddv(6, 0).tag == WindowTag::exact);
  CHECK(exact_ddv(6, -1).tag == WindowTag::upper_bound);
  CHECK(exact_ddv(6, 3).tag == WindowTag::upper_bound);
}

TEST_CASE("second differences against 50-digit coordinate sums") {
  using K = ShapeKind;
  const Configuration c2 = shape(K::antipodal), c3 = shape(K::equilateral_triangle), c4 = shape(K::tetrahedron),
                      c5 = shape(K::triangular_bipyramid), c6 = shape(K::octahedron),
                      c7 = shape(K::pentagonal_bipyramid);
  for (double s : {-1.9, -1.0, -0.5, 0.0, 0.7, 1.0, 1.9, 4.0, 9.0}) {
    CHECK(exact_ddv(3, s).value == Approx(ddv_from_coordinates(c2, c3, c4, s)).epsilon(1e-11));
    CHECK(exact_ddv(4, s).value == Approx(ddv_from_coordinates(c3, c4, c5, s)).epsilon(1e-11));
    CHECK(exact_ddv(5, s).value == Approx(ddv_from_coordinates(c4, c5, c6, s)).epsilon(1e-11));
    CHECK(exact_ddv(6, s).value == Approx(ddv_from_coordinates(c5, c6, c7, s)).epsilon(1e-10));
  }
}

TEST_CASE("sign of exact_ddv matches the second difference of exact_v") {
  for (double s = -1.95; s <= 2.0; s += 0.05) {
    for (int n = 3; n <= 6; ++n) {
      if (n == 6 && s < 0.0) continue;  // v(7) has no closed form there
      const double dd = exact_v(n - 1, s).value - 2 * exact_v(n, s).value + exact_v(n + 1, s).value;
      const double e = exact_ddv(n, s).value;
      if (std::fabs(e) > 1e-12) CHECK((dd > 0) == (e > 0));
    }
  }
}

TEST_CASE("N=5 second difference is negative on (-2, 40]") {
  for (int k = -199; k <= 4000; ++k) {
    const double s = 0.01 * k;
    CHECK(exact_ddv(5, s).value < 0.0);
  }
  CHECK(exact_ddv(5, 0).value == Approx(0.1 * std::log(std::pow(3.0, 8) / std::pow(2.0, 13))).epsilon(1e-13));
}

TEST_CASE("large-s behaviour of ddv(3)") {
  const double s = 200.0;
  CHECK(exact_ddv(3, s).value / ((1.0 / s) * std::pow(3.0 / 8.0, s / 2)) == Approx(1.0).epsilon(0.02));
}

TEST_CASE("s = -2 lane") {
  CHECK(v_minus_two(3) == Approx(-1.0));
  CHECK(v_minus_two(2) == Approx(-1.5));
  for (long n = 2; n < 200; ++n) {
    CHECK(v_minus_two(n + 1) > v_minus_two(n));
    CHECK(v_minus_two(n) < -0.5);
  }
  // discrete second difference of the closed form
  for (long n = 3; n < 60; ++n) {
    const double dd = v_minus_two(n - 1) - 2 * v_minus_two(n) + v_minus_two(n + 1);
    CHECK(ddv_minus_two(n) == Approx(dd).epsilon(1e-11));
    CHECK(ddv_minus_two(n) < 0.0);
  }
  CHECK(ddv_minus_two(3) == Approx(-1.0 / 3.0));
  CHECK(ddv_minus_two(3) == Approx(exact_ddv(3, -2).value).epsilon(1e-13));
}

TEST_CASE("even N below s = -2") {
  CHECK(v_subcritical_even(-3.0, 4) == Approx(-13.0 / 9.0).epsilon(1e-15));
  for (long n = 2; n <= 20; n += 2) {
    CHECK(v_subcritical_even(-2.0 - 1e-12, n) == Approx(v_minus_two(n)).epsilon(1e-9));
    // half at each pole, direct sum
    std::vector<UnitVector> p(n / 2, UnitVector{0, 0, 1});
    p.insert(p.end(), n / 2, UnitVector{0, 0, -1});
    for (double s : {-2.5, -3.0, -5.0})
      CHECK(v_subcritical_even(s, n) == Approx(average_pair_energy(s, Configuration(p))).epsilon(1e-13));
  }
  for (long n = 4; n <= 30; n += 2) {
    const double dd = v_subcritical_even(-3.0, n - 2) - 2 * v_subcritical_even(-3.0, n) + v_subcritical_even(-3.0, n + 2);
    CHECK(dd < 0.0);
  }
  CHECK_THROWS_AS(v_subcritical_even(-3.0, 5), DomainError);
  CHECK_THROWS_AS(v_subcritical_even(-1.0, 4), DomainError);
}

TEST_CASE("square pyramid height") {
  for (double s : {16.0, 50.0, 1000.0}) {
    const double z = square_pyramid_height(s);
    CHECK(z < 0.0);
    CHECK(z > -1.0);
    CHECK(std::fabs(std::pow(1 + z, 1 + s / 2) + (2 + std::exp2(-s / 2)) * z) <= 1e-13);
    const auto it = square_pyramid_newton_iterates(s);
    CHECK(it.front() == 0.0);
    for (std::size_t k = 1; k < it.size(); ++k) CHECK(it[k] < it[k - 1]);
  }
  // the root is the minimizer of the pyramid energy over the base height
  for (double s : {16.0, 30.0}) {
    const double z = square_pyramid_height(s);
    const double e = square_pyramid_energy(s);
    CHECK(e == Approx(average_pair_energy(s, realize({ShapeKind::square_pyramid, z}))).epsilon(1e-12));
    for (double dz : {-1e-3, 1e-3}) CHECK(average_pair_energy(s, realize({ShapeKind::square_pyramid, z + dz})) > e);
  }
  CHECK_THROWS_AS(square_pyramid_height(1.0), DomainError);
}

TEST_CASE("bipyramid / square pyramid crossover") {
  const double sd = s_dagger();
  CHECK(std::fabs(sd - 15.048077392) <= 1e-6);
  CHECK(square_pyramid_energy(sd) == Approx(exact_v(5, sd).value).epsilon(1e-8));
  const double v5bip = exact_v(5, sd - 1e-3).value;
  CHECK(v5bip < square_pyramid_energy(sd - 1e-3));
  // above the crossover the pyramid is lower
  CHECK(square_pyramid_energy(sd + 0.5) < average_pair_energy(sd + 0.5, realize({ShapeKind::triangular_bipyramid, {}})));
  CHECK(exact_v(5, sd + 0.5).value == Approx(square_pyramid_energy(sd + 0.5)));
}

TEST_CASE("square-pyramid branch of ddv(5) at very large s") {
  for (double s : {16.0, 20.0, 50.0, 120.0, 1e3, 1e4, 1e5, 1e6}) {
    const auto r = ddv5_square_pyramid_branch(s);
    CHECK(r.sign() < 0);
    if (s <= 120.0) {
      // direct evaluation where doubles still resolve the terms
      const double dd = exact_v(4, s).value - 2 * square_pyramid_energy(s) + exact_v(6, s).value;
      CHECK(r.value() == Approx(dd).epsilon(1e-9));
    } else {
      // 50-digit binary float with a wide exponent range
      const double z = square_pyramid_height(s);
      const big bs(s);
      auto t = [&](double c, double r2) { return big(c) * pow(big(r2), -bs / 2); };
      const big sum = t(1, 8.0 / 3.0) + t(0.2, 4.0) + t(0.8, 2.0) - t(0.8, 2 * (1 - z)) - t(0.8, 2 * (1 - z * z)) -
                      t(0.4, 4 * (1 - z * z));
      CHECK(sum < 0);
      const big log2_abs = log(-sum / bs) / log(big(2));
      CHECK(static_cast<double>(log2_abs) ==
            Approx(std::log2(-r.mantissa) + r.exponent2).epsilon(1e-9));
    }
  }
}

TEST_CASE("ddv(12) upper bound") {
  // direct trial configurations: icosahedron minus a vertex, icosahedron plus a face center
  const auto ico = shape(ShapeKind::icosahedron);
  const auto face = (ico[0] + ico[1] + ico[2]);
  REQUIRE(std::fabs((ico[0] - ico[1]).norm() - (ico[1] - ico[2]).norm()) < 1e-12);
  REQUIRE(std::fabs((ico[0] - ico[2]).norm() - (ico[1] - ico[2]).norm()) < 1e-12);
  const auto plus = add_point(ico, face.normalized());
  const auto minus = remove_point(ico, 0);
  for (double s : {-1.5, -0.5, 0.0, 1.0, 3.0}) {
    const double direct = average_pair_energy(s, minus) - 2 * average_pair_energy(s, ico) + average_pair_energy(s, plus);
    CHECK(ddv12_upper_bound(s) == Approx(direct).epsilon(1e-10));
    CHECK(ddv12_upper_bound(s) > 0.0);
  }
  double best = 1e9, at = 0;
  for (double s = -1.95; s <= 5.0; s += 0.001) {
    const double v = ddv12_upper_bound(s);
    if (v < best) best = v, at = s;
  }
  CHECK(best == Approx(0.014).epsilon(0.2));
  CHECK(std::fabs(at + 1.8) <= 0.2);
}

TEST_CASE("critical exponents") {
  CHECK(std::fabs(find_critical_s(CriticalTarget::s1_of_3) - 9.4) <= 0.1);
  const double s4 = find_critical_s(CriticalTarget::s1_of_4);
  CHECK(s4 > 0.0);
  CHECK(s4 < 1.0);
  const double s6 = find_critical_s(CriticalTarget::s1_of_6);
  CHECK(s6 > -2.0);
  CHECK(s6 < 0.0);
  CHECK(std::fabs(exact_ddv(4, s4).value) < 1e-14);
  CHECK(std::fabs(find_critical_s(CriticalTarget::s_dagger, 1e-12) - 15.048077392) <= 1e-6);
  CHECK(find_critical_s(CriticalTarget::s3_crossover, 1e-12, 3) ==
        Approx(std::log(4.0 / 9.0) / std::log(4.0 / 3.0)).epsilon(1e-14));
  // odd multiples of 3: split energies agree at the crossover
  for (long n : {3L, 9L, 15L}) {
    const double s = find_critical_s(CriticalTarget::s3_crossover, 1e-12, n);
    const double N = static_cast<double>(n);
    const double anti = (N * N - 1) / 4 * std::pow(2.0, -s), tri = N * N / 3 * std::pow(3.0, -s / 2);
    CHECK(anti == Approx(tri).epsilon(1e-12));
  }
  CHECK_THROWS_AS(find_critical_s(CriticalTarget::s3_crossover, 1e-12, 4), DomainError);
  CHECK_THROWS_AS(find_critical_s(CriticalTarget::s1_of_3, -1.0), DomainError);
}

TEST_CASE("rational positivity certificate") {
  const auto c = rational_positivity_certificate();
  CHECK(c.str() == "5764409437417341241721/209374412387531441339105280");
  CHECK(c.value > 0.0);
  CHECK(c.value < exact_ddv(4, 1).value);
}
