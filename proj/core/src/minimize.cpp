#include "riesz/minimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "riesz/errors.hpp"
#include "riesz/exact.hpp"

namespace riesz {

namespace {

constexpr double kCollision = 1e-9;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t restart_seed(std::uint64_t seed, std::size_t index) { return splitmix(splitmix(seed) ^ (index + 1)); }

std::vector<double> flatten(const Configuration& c) {
  std::vector<double> x;
  x.reserve(3 * c.n());
  for (const auto& p : c.points) {
    x.push_back(p.x);
    x.push_back(p.y);
    x.push_back(p.z);
  }
  return x;
}

Configuration unflatten(const std::vector<double>& x) {
  std::vector<UnitVector> p(x.size() / 3);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = {x[3 * i], x[3 * i + 1], x[3 * i + 2]};
  return Configuration(std::move(p));
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

void retract(std::vector<double>& x) {
  for (std::size_t i = 0; i < x.size(); i += 3) {
    const double r = std::sqrt(x[i] * x[i] + x[i + 1] * x[i + 1] + x[i + 2] * x[i + 2]);
    x[i] /= r;
    x[i + 1] /= r;
    x[i + 2] /= r;
  }
}

double min_distance2(const std::vector<double>& x) {
  double best = kInfinity;
  for (std::size_t i = 0; i < x.size(); i += 3)
    for (std::size_t j = i + 3; j < x.size(); j += 3) {
      const double dx = x[i] - x[j], dy = x[i + 1] - x[j + 1], dz = x[i + 2] - x[j + 2];
      best = std::min(best, dx * dx + dy * dy + dz * dz);
    }
  return best;
}

void check_collision(double s, const std::vector<double>& x) {
  if (s >= 0.0 && min_distance2(x) < kCollision * kCollision)
    throw CollisionError("two points closer than 1e-9; restart abandoned");
}

// E(xn) - E(x) computed pairwise from the displacement, so that it keeps its
// relative accuracy once the two energies agree to the last bit.
double energy_change(double s, const std::vector<double>& x, const std::vector<double>& xn) {
  const std::size_t n = x.size() / 3;
  const double f = 2.0 / (static_cast<double>(n) * (n - 1));
  std::vector<double> step(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) step[k] = xn[k] - x[k];
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double r2 = 0.0, r2n = 0.0, delta = 0.0;
      for (int c = 0; c < 3; ++c) {
        const double d = x[3 * i + c] - x[3 * j + c];
        const double dn = xn[3 * i + c] - xn[3 * j + c];
        r2 += d * d;
        r2n += dn * dn;
        delta += (step[3 * i + c] - step[3 * j + c]) * (d + dn);
      }
      if (r2 == 0.0 || r2n == 0.0) {
        if (s >= 0.0) return r2n == 0.0 ? kInfinity : -kInfinity;
        sum += ((r2n == 0.0 ? 0.0 : std::pow(r2n, -0.5 * s)) - (r2 == 0.0 ? 0.0 : std::pow(r2, -0.5 * s))) / s;
        continue;
      }
      const double l = std::log1p(delta / r2);
      const double y = -0.5 * s * l;
      const double scale = y == 0.0 ? 1.0 : std::expm1(y) / y;
      sum += std::pow(r2, -0.5 * s) * scale * (-0.5 * l);
    }
  return f * sum;
}

std::vector<UnitVector> spiral(std::size_t k) {
  // golden-angle directions on the upper hemisphere
  std::vector<UnitVector> d;
  const double ga = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < k; ++i) {
    const double z = 1.0 - (i + 0.5) / static_cast<double>(k);
    const double rho = std::sqrt(1.0 - z * z);
    d.push_back({rho * std::cos(ga * i), rho * std::sin(ga * i), z});
  }
  return d;
}

std::vector<Configuration> named_starts(double s, std::size_t n) {
  std::vector<Configuration> out;
  for (int k = 0; k <= static_cast<int>(ShapeKind::icosahedron); ++k) {
    const auto kind = static_cast<ShapeKind>(k);
    if (shape_size(kind) != n) continue;
    NamedShape shape{kind, std::nullopt};
    if (kind == ShapeKind::square_pyramid) shape.parameter = s > 2.0 ? square_pyramid_height(s) : -0.1;
    out.push_back(realize(shape));
  }
  return out;
}

}  // namespace

std::size_t default_restarts(std::size_t n) { return std::max<std::size_t>(64, 8 * n); }

Configuration random_config(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw DomainError("random_config: n >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<UnitVector> p;
  p.reserve(n);
  while (p.size() < n) {
    const Vec3 v{g(rng), g(rng), g(rng)};
    if (v.norm() > 1e-12) p.push_back(v.normalized());
  }
  return Configuration(std::move(p));
}

MinimizeResult local_minimize(RieszExponent s, const Configuration& start, const MinimizeOptions& opts,
                              bool keep_trace) {
  const double sv = s.value();
  if (!(sv > -2.0)) throw DomainError("local_minimize: s > -2 required");
  if (start.n() < 2) throw DomainError("local_minimize: at least two points");
  if (!(opts.grad_tol > 0.0)) throw DomainError("local_minimize: grad_tol > 0");

  std::vector<double> x = flatten(start);
  retract(x);
  check_collision(sv, x);
  std::vector<double> g, xn, gn;
  double e = energy_and_gradient(sv, x, g);
  if (!std::isfinite(e)) throw CollisionError("start configuration has coincident points");
  double gnorm = std::sqrt(dot(g, g));

  MinimizeResult res;
  if (keep_trace) res.trace.push_back(e);
  const double n = static_cast<double>(start.n());
  double gmax = 0.0;
  for (double v : g) gmax = std::max(gmax, std::fabs(v));
  double t = gmax > 0.0 ? 0.1 / (std::sqrt(n) * gmax) : 1.0;
  double bb = -1.0;
  constexpr double c1 = 1e-4;

  std::size_t it = 0, stalls = 0, last_progress = 0;
  double best_g = gnorm;
  bool floor_hit = false;
  for (; it < opts.max_iters; ++it) {
    if (gnorm <= opts.grad_tol) break;
    double trial = (it >= opts.bb_after && bb > 0.0) ? bb : 2.0 * t;
    bool accepted = false;
    double change = 0.0;
    for (int halving = 0; halving < 60; ++halving) {
      xn = x;
      for (std::size_t i = 0; i < x.size(); ++i) xn[i] -= trial * g[i];
      retract(xn);
      change = energy_change(sv, x, xn);
      if (std::isfinite(change) && change <= -c1 * trial * gnorm * gnorm) {
        accepted = true;
        break;
      }
      trial *= 0.5;
    }
    if (accepted) {
      energy_and_gradient(sv, xn, gn);
      stalls = 0;
    } else {
      if (++stalls > 20) break;
      floor_hit = true;
      // below energy resolution: take the step only if it shrinks the tangent gradient
      trial = bb > 0.0 ? bb : t;
      for (int halving = 0; halving < 30 && !accepted; ++halving, trial *= 0.5) {
        xn = x;
        for (std::size_t i = 0; i < x.size(); ++i) xn[i] -= trial * g[i];
        retract(xn);
        energy_and_gradient(sv, xn, gn);
        accepted = dot(gn, gn) < gnorm * gnorm;
      }
      if (!accepted) break;
      change = std::min(change, 0.0);
    }
    // two-point secant step for the next iteration
    double sy = 0.0, ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double dx = xn[i] - x[i];
      ss += dx * dx;
      sy += dx * (gn[i] - g[i]);
    }
    bb = sy > 0.0 ? std::min(ss / sy, 1e3 * trial + 1.0) : -1.0;
    t = trial;
    x.swap(xn);
    g.swap(gn);
    // the trace accumulates the accurate differences; e is recomputed at the end
    e += change;
    gnorm = std::sqrt(dot(g, g));
    if (keep_trace) res.trace.push_back(e);
    if (gnorm < 0.99 * best_g) {
      best_g = gnorm;
      last_progress = it;
      floor_hit = false;
    } else if ((floor_hit || gnorm < 1e-8) && it - last_progress > 200) {
      break;  // rounding floor: the gradient has not shrunk in 200 steps
    }
  }
  e = energy_and_gradient(sv, x, g);
  check_collision(sv, x);
  res.config = unflatten(x);
  res.energy = e;
  res.grad_norm = gnorm;
  res.iterations = it;
  res.converged = gnorm <= opts.grad_tol;
  return res;
}

std::pair<Configuration, std::string> subcritical_configuration(RieszExponent s, std::size_t n) {
  const double sv = s.value();
  if (sv > -2.0) throw DomainError("subcritical_configuration: s <= -2 required");
  if (n < 2) throw DomainError("subcritical_configuration: n >= 2");
  const UnitVector north{0, 0, 1}, south{0, 0, -1};
  if (sv == -2.0) {
    // any configuration with centroid 0 is optimal
    std::vector<UnitVector> p;
    std::size_t pairs = n / 2;
    if (n % 2 == 1) {
      pairs = (n - 3) / 2;
      const double c = std::sqrt(3.0) / 2.0;
      p = {{1, 0, 0}, {-0.5, c, 0}, {-0.5, -c, 0}};
    }
    for (const auto& d : spiral(pairs)) {
      p.push_back(d);
      p.push_back(d * -1.0);
    }
    return {Configuration(std::move(p)), "analytic(s=-2, centroid 0)"};
  }
  auto clusters = [&](const std::vector<UnitVector>& sites, const std::vector<std::size_t>& counts) {
    std::vector<UnitVector> p;
    for (std::size_t k = 0; k < sites.size(); ++k) p.insert(p.end(), counts[k], sites[k]);
    return Configuration(std::move(p));
  };
  if (n % 2 == 0) return {clusters({north, south}, {n / 2, n / 2}), "analytic(s<-2, even N)"};
  Configuration best = clusters({north, south}, {(n + 1) / 2, (n - 1) / 2});
  if (n % 3 == 0) {
    const double c = std::sqrt(3.0) / 2.0;
    Configuration tri = clusters({{1, 0, 0}, {-0.5, c, 0}, {-0.5, -c, 0}}, {n / 3, n / 3, n / 3});
    if (average_pair_energy(s, tri) < average_pair_energy(s, best)) best = tri;
  }
  return {best, "heuristic(s<-2, odd N)"};
}

MultiStartResult multi_start(RieszExponent s, std::size_t n, const MinimizeOptions& opts,
                             const std::vector<Configuration>& warm_starts) {
  const double sv = s.value();
  if (n < 2) throw DomainError("multi_start: n >= 2");
  if (!(sv > -2.0)) {
    MultiStartResult out;
    auto [cfg, lane] = subcritical_configuration(s, n);
    out.best.energy = average_pair_energy(s, cfg);
    out.best.config = std::move(cfg);
    out.best.grad_norm = 0.0;
    out.best.converged = true;
    out.lane = lane;
    out.pool.attempted = 1;
    out.pool.distinct_energies = 1;
    out.pool.energies = {out.best.energy};
    return out;
  }
  const std::size_t restarts = opts.restarts.value_or(default_restarts(n));
  if (restarts < 1) throw DomainError("multi_start: restarts >= 1");

  std::vector<Configuration> extra = named_starts(sv, n);
  for (const auto& w : warm_starts)
    if (w.n() == n) extra.push_back(w);
  const std::size_t total = restarts + extra.size();

  std::vector<std::optional<MinimizeResult>> results(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < total; k = next++) {
      const Configuration start = k < restarts ? random_config(n, restart_seed(opts.seed, k)) : extra[k - restarts];
      try {
        MinimizeResult r = local_minimize(s, start, opts);
        r.restart_index = k;
        results[k] = std::move(r);
      } catch (const NumericError&) {
        // recorded as a failed restart
      }
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  MultiStartResult out;
  out.pool.attempted = total;
  const MinimizeResult* best = nullptr;
  for (const auto& r : results) {
    if (!r) {
      ++out.pool.failed;
      continue;
    }
    out.pool.energies.push_back(r->energy);
    if (!best || r->energy < best->energy - 1e-12) best = &*r;
  }
  if (!best) throw NumericError("multi_start: every restart failed");
  std::sort(out.pool.energies.begin(), out.pool.energies.end());
  for (std::size_t i = 0; i < out.pool.energies.size(); ++i)
    if (i == 0 || out.pool.energies[i] - out.pool.energies[i - 1] > 1e-9) ++out.pool.distinct_energies;
  out.best = *best;

  if (opts.polish_tol) {
    MinimizeOptions p = opts;
    p.grad_tol = *opts.polish_tol;
    p.max_iters = std::max<std::size_t>(opts.max_iters, 50000);
    try {
      MinimizeResult r = local_minimize(s, out.best.config, p);
      if (r.energy <= out.best.energy) {
        r.restart_index = out.best.restart_index;
        r.iterations += out.best.iterations;
        r.converged = r.grad_norm <= opts.grad_tol;
        out.best = std::move(r);
      }
    } catch (const NumericError&) {
    }
  }
  return out;
}

EnergyTable scan(RieszExponent s, long n_lo, long n_hi, const MinimizeOptions& opts) {
  if (n_lo < 2 || n_hi < n_lo) throw DomainError("scan: 2 <= n_lo <= n_hi required");
  EnergyTable table;
  table.s = s.value();
  std::ostringstream prov;
  prov << "computed(" << opts.seed << ","
       << (opts.restarts ? std::to_string(*opts.restarts) : std::string("default")) << ")";
  std::optional<Configuration> previous;
  for (long n = n_lo; n <= n_hi; ++n) {
    if (!(s.value() > -2.0)) {
      if (s.value() == -2.0) {
        table.set(n, v_minus_two(n), "analytic(s=-2)");
      } else {
        auto [cfg, lane] = subcritical_configuration(s, n);
        const double v = n % 2 == 0 ? v_subcritical_even(s, n) : average_pair_energy(s, cfg);
        table.set(n, v, lane);
      }
      continue;
    }
    std::vector<Configuration> warm;
    if (previous) {
      // previous optimum plus one random point
      const Configuration extra = random_config(2, restart_seed(opts.seed ^ 0xA5A5A5A5ULL, n));
      warm.push_back(add_point(*previous, extra[0]));
    }
    try {
      const auto r = multi_start(s, static_cast<std::size_t>(n), opts, warm);
      table.set(n, r.best.energy, prov.str());
      previous = r.best.config;
    } catch (const NumericError& e) {
      table.set(n, std::numeric_limits<double>::quiet_NaN(), std::string("failed: ") + e.what());
      previous.reset();
    }
  }
  return table;
}

}  // namespace riesz
