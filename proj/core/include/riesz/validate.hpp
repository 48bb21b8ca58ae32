#pragma once

#include <map>
#include <string>
#include <vector>

#include "riesz/concavity.hpp"
#include "riesz/table.hpp"

namespace riesz {

struct ContinuumConstants {
  double w_log = 0.0;
  double c_log = 0.0;
  double c_2 = 0.0;
  double a_log = 0.0;
  double b_log = 0.0;
  double c_log_conjectured = 0.0;
};

struct EmbeddedData {
  MagicCatalog catalog;
  MagicCatalog catalog_pre_correction;
  ContinuumConstants constants;
};

EmbeddedData embedded_catalog();

struct RowVerdict {
  long n = 0;
  bool consistent = true;
  std::vector<std::string> reasons;  // flags; empty when consistent
  std::vector<std::string> notes;    // informational, never flags
};

struct TableReport {
  double s = 0.0;
  std::string label;
  std::map<long, RowVerdict> rows;
  std::optional<ConvexityReport> convexity;
  // Catalog disagreements inside the analyzable range, when a catalog set exists for s.
  std::vector<long> catalog_missing;  // in catalog, not in c_plus
  std::vector<long> catalog_extra;    // in c_plus, not in catalog
};

struct ValidationReport {
  std::vector<TableReport> tables;  // ordered by s
  bool flagged() const;
  std::vector<std::string> flags() const;
};

// Runs monotonicity in N and s, the bound containment and complement checks for s < 0,
// convexity sets and the catalog comparison.  Tables labelled as nets get notes instead of flags.
ValidationReport validate(std::vector<EnergyTable> tables);

void write_report(const ValidationReport& r, std::ostream& out);

}  // namespace riesz
