// riesz: command line front end for the energy workbench.
#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "riesz/asymptotics.hpp"
#include "riesz/bounds.hpp"
#include "riesz/concavity.hpp"
#include "riesz/errors.hpp"
#include "riesz/exact.hpp"
#include "riesz/io.hpp"
#include "riesz/minimize.hpp"
#include "riesz/nets.hpp"
#include "riesz/special.hpp"
#include "riesz/validate.hpp"

using namespace riesz;

namespace {

constexpr int kExitFlags = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct SearchFlags {
  std::optional<std::size_t> restarts;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  std::size_t max_iters = 20000;
  unsigned threads = 0;

  void attach(CLI::App* app) {
    app->add_option("--restarts", restarts, "random restarts (default max(64, 8N))")->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "RNG seed")->capture_default_str();
    app->add_option("--tol", tol, "tangent-gradient tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    app->add_option("--max-iters", max_iters, "iteration cap per restart")->capture_default_str();
    app->add_option("--threads", threads, "worker threads, 0 = all cores")->capture_default_str();
  }
  MinimizeOptions options() const {
    MinimizeOptions o;
    o.restarts = restarts;
    o.seed = seed;
    o.grad_tol = tol;
    o.max_iters = max_iters;
    o.threads = threads;
    return o;
  }
};

void two_column(const EnergyTable& t) {
  for (const auto& [n, r] : t.rows) std::cout << n << ' ' << format_real(r.v) << '\n';
}

void emit_table(const EnergyTable& t, const std::string& out) {
  if (out.empty())
    two_column(t);
  else
    write_energy_table(t, out);
}

std::string set_str(const IntSet& s) {
  std::string out = "{";
  for (long n : s) out += (out.size() > 1 ? "," : "") + std::to_string(n);
  return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riesz s-energy workbench for points on the sphere"};
  app.set_config("--config", "", "key=value defaults file");
  app.require_subcommand(1);
  int status = 0;

  // minimize
  auto* mn = app.add_subcommand("minimize", "multi-start search for one N");
  long m_n = 0;
  double m_s = 0.0;
  std::string m_out, m_energy_out;
  SearchFlags m_flags;
  mn->add_option("--n", m_n, "number of points")->required()->check(CLI::Range(2L, 100000L));
  mn->add_option("--s", m_s, "Riesz exponent")->required();
  mn->add_option("--out", m_out, "configuration file");
  mn->add_option("--energy-out", m_energy_out, "one-row energy table");
  m_flags.attach(mn);
  mn->callback([&] {
    const auto r = multi_start(m_s, static_cast<std::size_t>(m_n), m_flags.options());
    if (!m_out.empty()) write_configuration(r.best.config, m_out);
    EnergyTable t;
    t.s = m_s;
    t.set(m_n, r.best.energy,
          r.lane == "search" ? "computed(" + std::to_string(m_flags.seed) + "," +
                                   (m_flags.restarts ? std::to_string(*m_flags.restarts) : std::string("default")) + ")"
                             : r.lane);
    if (!m_energy_out.empty()) write_energy_table(t, m_energy_out);
    std::cout << m_n << ' ' << format_real(r.best.energy) << '\n';
    std::cerr << "lane=" << r.lane << " grad_norm=" << r.best.grad_norm << " restart=" << r.best.restart_index
              << " converged=" << r.best.converged << " attempted=" << r.pool.attempted << " failed=" << r.pool.failed
              << " distinct_minima=" << r.pool.distinct_energies << '\n';
  });

  // scan
  auto* sc = app.add_subcommand("scan", "best energies over a range of N");
  long sc_lo = 2, sc_hi = 2;
  double sc_s = 0.0;
  std::string sc_out;
  SearchFlags sc_flags;
  sc->add_option("--n-min", sc_lo)->required()->check(CLI::Range(2L, 100000L));
  sc->add_option("--n-max", sc_hi)->required()->check(CLI::Range(2L, 100000L));
  sc->add_option("--s", sc_s)->required();
  sc->add_option("--out", sc_out, "table file");
  sc_flags.attach(sc);
  sc->callback([&] {
    if (sc_hi < sc_lo) throw CLI::ValidationError("--n-max", "must be >= --n-min");
    emit_table(scan(sc_s, sc_lo, sc_hi, sc_flags.options()), sc_out);
  });

  // exact
  auto* ex = app.add_subcommand("exact", "closed-form value and window tag");
  int ex_n = 0;
  double ex_s = 0.0;
  ex->add_option("--n", ex_n)->required();
  ex->add_option("--s", ex_s)->required();
  ex->callback([&] {
    std::cout.precision(17);
    if (ex_s <= -2.0) {
      if (ex_s == -2.0) {
        std::cout << "v " << v_minus_two(ex_n) << " exact centroid-zero\n";
        if (ex_n >= 3) std::cout << "ddv " << ddv_minus_two(ex_n) << " exact\n";
      } else {
        std::cout << "v " << v_subcritical_even(ex_s, ex_n) << " exact even-N\n";
      }
      return;
    }
    const auto v = exact_v(ex_n, ex_s);
    std::cout << "v " << v.value << ' ' << to_string(v.tag) << ' ' << v.window << '\n';
    if (ex_n >= 3 && ex_n <= 6) {
      const auto d = exact_ddv(ex_n, ex_s);
      std::cout << "ddv " << d.value << ' ' << to_string(d.tag) << ' ' << d.window;
      if (ex_n <= 5 && ex_s == std::round(ex_s) && static_cast<long>(ex_s) % 2 == 0 && ex_s != 0.0)
        std::cout << ' ' << exact_ddv_rational(ex_n, static_cast<int>(ex_s)).str();
      std::cout << '\n';
    }
  });

  // analyze
  auto* an = app.add_subcommand("analyze", "second differences, convexity sets, magic comparison");
  std::string an_table, an_out;
  double an_tol = 0.0;
  an->add_option("--table", an_table)->required()->check(CLI::ExistingFile);
  an->add_option("--tol", an_tol, "zero band for second differences")->capture_default_str();
  an->add_option("--out", an_out, "report file");
  an->callback([&] {
    const auto t = read_energy_table(an_table);
    const auto r = convexity_sets(t, an_tol);
    const MagicCatalog cat = magic_catalog();
    const double si = std::round(t.s);
    const bool have_cat = si == t.s && si >= -1 && si <= 3;
    std::ostringstream csv;
    csv << "N,ddv,class,catalog\n";
    for (const auto& [n, d] : r.ddv) {
      const char* cls = r.c_plus.count(n) ? "plus" : (r.c_minus.count(n) ? "minus" : "zero");
      std::string c = "unknown";
      if (have_cat) {
        const auto m = cat.contains(static_cast<int>(si), n);
        c = m == Membership::member ? "plus" : (m == Membership::non_member ? "not_plus" : "unknown");
      }
      csv << n << ',' << format_real(d) << ',' << cls << ',' << c << '\n';
    }
    if (an_out.empty()) {
      for (const auto& [n, d] : r.ddv) std::cout << n << ' ' << format_real(d) << '\n';
    } else {
      std::ofstream(an_out) << csv.str();
    }
    std::cerr << "C+ = " << set_str(r.c_plus) << "\nC0 = " << set_str(r.c_zero) << "\nC- size = " << r.c_minus.size()
              << '\n';
    if (t.s == 0.0) std::cerr << "magic numbers in [" << r.n_lo << "," << r.n_hi << "] = " << set_str(magic_numbers(r)) << '\n';
  });

  // validate
  auto* va = app.add_subcommand("validate", "necessary-condition checks on energy tables");
  std::string va_table, va_out;
  std::vector<std::string> va_companions;
  va->add_option("--table", va_table)->required()->check(CLI::ExistingFile);
  va->add_option("--companion-s", va_companions, "tables at other exponents")->check(CLI::ExistingFile);
  va->add_option("--out", va_out, "report file");
  va->callback([&] {
    std::vector<EnergyTable> ts{read_energy_table(va_table)};
    for (const auto& p : va_companions) ts.push_back(read_energy_table(p));
    const auto rep = validate(ts);
    if (!va_out.empty()) {
      std::ofstream f(va_out);
      write_report(rep, f);
    } else {
      write_report(rep, std::cout);
    }
    for (const auto& f : rep.flags()) std::cerr << "flag: " << f << '\n';
    if (rep.flagged()) status = kExitFlags;
  });

  // bounds
  auto* bo = app.add_subcommand("bounds", "upper and lower bounds on the second difference (s < 0)");
  long bo_n = 0;
  double bo_s = 0.0;
  std::string bo_table, bo_cfg;
  bo->add_option("--n", bo_n)->required();
  bo->add_option("--s", bo_s)->required();
  bo->add_option("--table", bo_table, "energy table holding v(N-1), v(N), v(N+1)")->required()->check(CLI::ExistingFile);
  bo->add_option("--configuration", bo_cfg, "optimal N-point configuration for the pointwise bound")
      ->check(CLI::ExistingFile);
  bo->callback([&] {
    const auto t = read_energy_table(bo_table);
    if (t.s != bo_s) throw CLI::ValidationError("--table", "table exponent differs from --s");
    std::cout.precision(17);
    std::cout << "bound,lower,upper,observed,satisfied\n";
    std::optional<double> obs;
    if (t.contains(bo_n - 1) && t.contains(bo_n + 1)) obs = second_diff(t, bo_n);
    const auto b = ddv_bounds_prop1(bo_s, bo_n, t.v(bo_n), obs);
    auto obs_str = [&] { return obs ? format_real(*obs) : std::string(); };
    std::cout << "two_sided," << format_real(b.lower) << ',' << format_real(b.upper) << ',' << obs_str() << ','
              << (b.satisfied ? "yes" : "no") << '\n';
    if (t.contains(bo_n - 1)) {
      const double u = ddv_upper_prop2(bo_s, bo_n, t.v(bo_n - 1));
      std::cout << "upper_from_previous,," << format_real(u) << ',' << obs_str() << ','
                << (!obs || *obs <= u ? "yes" : "no") << '\n';
    }
    if (!bo_cfg.empty()) {
      const auto c = read_configuration(bo_cfg);
      if (static_cast<long>(c.n()) != bo_n) throw CLI::ValidationError("--configuration", "size differs from --n");
      const double u = ddv_upper_pointwise(bo_s, c);
      std::cout << "upper_pointwise,," << format_real(u) << ',' << obs_str() << ','
                << (!obs || *obs <= u ? "yes" : "no") << '\n';
    }
    if (!b.satisfied) status = kExitFlags;
  });

  // asympt
  auto* as = app.add_subcommand("asympt", "continuum constants and leading large-N terms");
  double as_s = 0.0;
  long as_n = 2;
  as->add_option("--s", as_s)->required();
  as->add_option("--n", as_n)->required()->check(CLI::Range(2L, 1000000000L));
  as->callback([&] {
    std::cout.precision(17);
    std::cout << "W_log " << w_log() << '\n';
    if (as_s != 2.0) std::cout << "W_s " << w_s(as_s) << '\n';
    if (as_s > -2.0 && as_s < 2.0) {
      const auto u = u_leading(as_s, as_n);
      const auto d = ddu_leading(as_s, as_n);
      std::cout << "u_leading " << u.value << (u.cs_term_included ? "" : " (C_s term omitted)") << '\n';
      std::cout << "ddu_leading " << d.value << (d.cs_term_included ? "" : " (C_s term omitted)") << '\n';
    }
    if (as_s == 2.0) std::cout << "C_2 " << kC2 << "\ntilde_shift " << kC2 + 0.25 * std::log(double(as_n)) << '\n';
    if (as_s > 2.0 && as_s < 4.0)
      std::cout << "tilde_shift " << readjust_lattice_coefficient(as_s) * std::pow(double(as_n), 0.5 * as_s - 1.0)
                << '\n';
    if (as_s > 0.0 && as_s != 2.0) {
      const auto c = c_s_conjectured(as_s);
      std::cout << "C_s " << (c.value ? format_real(*c.value) : std::string("n/a")) << " sign " << c.sign << '\n';
    }
    if (as_s == 0.0) {
      std::cout << "C_log " << kCLog << '\n';
      std::cout << "log_energy_expansion " << log_energy_expansion(as_n) << '\n';
    }
  });

  // nets
  auto* ne = app.add_subcommand("nets", "energy curve of lifted Sobol' nets");
  long ne_count = 3;
  double ne_s = -1.0;
  bool ne_skip = false;
  std::string ne_out;
  ne->add_option("--count", ne_count)->required()->check(CLI::Range(3L, 10000000L));
  ne->add_option("--s", ne_s)->required();
  ne->add_flag("--skip-zero", ne_skip, "drop the index-0 point");
  ne->add_option("--out", ne_out, "table file");
  ne->callback([&] { emit_table(net_energy_curve(ne_s, static_cast<std::size_t>(ne_count), ne_skip), ne_out); });

  // critical
  auto* cr = app.add_subcommand("critical", "critical exponents");
  std::string cr_which;
  double cr_tol = 1e-12;
  long cr_n = 3;
  cr->add_option("--which", cr_which)->required()->check(CLI::IsMember({"s1_3", "s1_4", "s1_6", "s_dagger", "s3"}));
  cr->add_option("--tol", cr_tol)->capture_default_str()->check(CLI::PositiveNumber);
  cr->add_option("--n", cr_n, "odd multiple of 3, for --which s3")->capture_default_str();
  cr->callback([&] {
    static const std::map<std::string, CriticalTarget> m = {{"s1_3", CriticalTarget::s1_of_3},
                                                            {"s1_4", CriticalTarget::s1_of_4},
                                                            {"s1_6", CriticalTarget::s1_of_6},
                                                            {"s_dagger", CriticalTarget::s_dagger},
                                                            {"s3", CriticalTarget::s3_crossover}};
    std::cout.precision(12);
    std::cout << find_critical_s(m.at(cr_which), cr_tol, cr_n) << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const BracketError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const FormatError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return status;
}
