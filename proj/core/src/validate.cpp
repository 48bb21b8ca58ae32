#include "riesz/validate.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "riesz/asymptotics.hpp"
#include "riesz/bounds.hpp"
#include "riesz/io.hpp"
#include "riesz/nets.hpp"

namespace riesz {

EmbeddedData embedded_catalog() {
  EmbeddedData d;
  d.catalog = magic_catalog(false);
  d.catalog_pre_correction = magic_catalog(true);
  d.constants = {w_log(), kCLog, kC2, log_expansion_a(), log_expansion_b(), log_expansion_c()};
  return d;
}

bool ValidationReport::flagged() const { return !flags().empty(); }

std::vector<std::string> ValidationReport::flags() const {
  std::vector<std::string> out;
  for (const auto& t : tables)
    for (const auto& [n, v] : t.rows)
      for (const auto& r : v.reasons) out.push_back("s=" + format_real(t.s) + " N=" + std::to_string(n) + ": " + r);
  return out;
}

ValidationReport validate(std::vector<EnergyTable> tables) {
  std::stable_sort(tables.begin(), tables.end(), [](const auto& a, const auto& b) { return a.s < b.s; });
  ValidationReport rep;
  const MagicCatalog catalog = magic_catalog(false);
  for (const auto& t : tables) {
    TableReport tr;
    tr.s = t.s;
    tr.label = t.label;
    const bool net = t.label == kNetTableLabel;
    for (const auto& [n, r] : t.rows) tr.rows[n].n = n;
    auto flag = [&](long n, const std::string& why) {
      auto& row = tr.rows[n];
      row.n = n;
      if (net) {
        row.notes.push_back(why + " (net, not optimal)");
      } else {
        row.reasons.push_back(why);
        row.consistent = false;
      }
    };

    bool finite = true;
    for (const auto& [n, r] : t.rows)
      if (!std::isfinite(r.v)) {
        flag(n, "non-finite value (" + r.provenance + ")");
        finite = false;
      }

    for (const auto& v : monotonicity_check_N(t)) flag(v.n, "not increasing in N: " + v.message);

    if (t.s < 0.0 && finite) {
      for (const auto& [n, r] : t.rows) {
        if (n < 3 || !t.contains(n - 1) || !t.contains(n + 1)) continue;
        const double dd = second_diff(t, n);
        const auto b = ddv_bounds_prop1(t.s, n, r.v, dd);
        if (!b.satisfied) {
          std::ostringstream os;
          os.precision(17);
          os << "second difference " << dd << " outside [" << b.lower << " .. " << b.upper << "]";
          flag(n, os.str());
        }
      }
      for (const auto& c : check_monotonicity_complement(t)) {
        std::ostringstream os;
        os.precision(17);
        os << "complement estimate: v = " << c.v << " below " << c.lower << " or above v(N+1)";
        flag(c.n, os.str());
      }
    }

    if (finite && t.size() >= 3 && t.contiguous()) {
      tr.convexity = convexity_sets(t, 0.0);
      const double si = std::round(t.s);
      if (si == t.s && si >= -1.0 && si <= 3.0) {
        const auto& cat = catalog.at(static_cast<int>(si));
        for (long n = std::max(tr.convexity->n_lo, catalog.range_lo); n <= std::min(tr.convexity->n_hi, catalog.range_hi);
             ++n) {
          const bool in_cat = cat.count(n) != 0, in_tab = tr.convexity->c_plus.count(n) != 0;
          if (in_cat && !in_tab) {
            tr.catalog_missing.push_back(n);
            flag(n, "catalog lists N as convex, table does not");
          } else if (!in_cat && in_tab) {
            tr.catalog_extra.push_back(n);
            flag(n, "table convex at N, catalog does not list it");
          }
        }
      }
    } else if (!t.contiguous()) {
      for (const auto& [n, r] : t.rows) tr.rows[n].notes.push_back("N range not contiguous; no second differences");
    }
    rep.tables.push_back(std::move(tr));
  }

  // across s
  for (std::size_t i = 0; i + 1 < tables.size(); ++i) {
    if (tables[i].s == tables[i + 1].s) continue;
    for (const auto& v : monotonicity_check_s({tables[i], tables[i + 1]})) {
      auto& row = rep.tables[i + 1].rows[v.n];
      row.n = v.n;
      const bool net = tables[i].label == kNetTableLabel || tables[i + 1].label == kNetTableLabel;
      if (net) {
        row.notes.push_back("not increasing in s: " + v.message + " (net, not optimal)");
      } else {
        row.reasons.push_back("not increasing in s: " + v.message);
        row.consistent = false;
      }
    }
  }
  return rep;
}

void write_report(const ValidationReport& r, std::ostream& out) {
  out << "s,N,verdict,detail\n";
  for (const auto& t : r.tables) {
    for (const auto& [n, v] : t.rows) {
      std::string detail;
      for (const auto& x : v.reasons) detail += (detail.empty() ? "" : "; ") + x;
      for (const auto& x : v.notes) detail += (detail.empty() ? "" : "; ") + x;
      out << format_real(t.s) << ',' << n << ',' << (v.consistent ? "consistent" : "flagged") << ',' << detail << '\n';
    }
  }
}

}  // namespace riesz
