#include "riesz/table.hpp"

#include "riesz/errors.hpp"

namespace riesz {

void EnergyTable::set(long n, double v, std::string provenance) {
  rows[n] = TableRow{v, std::move(provenance)};
}

double EnergyTable::v(long n) const {
  auto it = rows.find(n);
  if (it == rows.end()) throw DomainError("energy table has no row for N=" + std::to_string(n));
  return it->second.v;
}

long EnergyTable::n_min() const {
  if (rows.empty()) throw DomainError("empty energy table");
  return rows.begin()->first;
}

long EnergyTable::n_max() const {
  if (rows.empty()) throw DomainError("empty energy table");
  return rows.rbegin()->first;
}

bool EnergyTable::contiguous() const {
  if (rows.empty()) return true;
  return static_cast<long>(rows.size()) == n_max() - n_min() + 1;
}

}  // namespace riesz
