#pragma once

#include <map>
#include <string>

namespace riesz {

struct TableRow {
  double v = 0.0;
  std::string provenance = "external";
};

struct EnergyTable {
  double s = 0.0;
  std::map<long, TableRow> rows;
  // Free-form tag; "net, not optimal" tells validators the rows are not putative minima.
  std::string label;

  void set(long n, double v, std::string provenance);
  bool contains(long n) const { return rows.count(n) != 0; }
  // Throws DomainError when the row is missing.
  double v(long n) const;
  long n_min() const;
  long n_max() const;
  bool contiguous() const;
  std::size_t size() const { return rows.size(); }
};

}  // namespace riesz
