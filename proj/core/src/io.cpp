#include "riesz/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

double parse_real(const std::string& field, std::size_t line) {
  const std::string f = trim(field);
  if (f == "inf" || f == "+inf") return kInfinity;
  if (f == "-inf") return -kInfinity;
  if (f == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
  if (ec != std::errc() || ptr != f.data() + f.size() || f.empty())
    throw FormatError("line " + std::to_string(line) + ": not a number: '" + f + "'");
  return v;
}

long parse_int(const std::string& field, std::size_t line) {
  const std::string f = trim(field);
  long v = 0;
  auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
  if (ec != std::errc() || ptr != f.data() + f.size() || f.empty())
    throw FormatError("line " + std::to_string(line) + ": not an integer: '" + f + "'");
  return v;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  return out;
}

}  // namespace

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

EnergyTable read_energy_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty table file");
  const std::string header = trim(line);
  bool conventional = false;
  if (header == kConventionalHeader)
    conventional = true;
  else if (header != kTableHeader)
    throw FormatError("bad header '" + header + "', expected '" + kTableHeader + "'");
  EnergyTable t;
  bool have_s = false;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    // provenance is everything after the third comma and may itself hold commas
    std::size_t c1 = line.find(','), c2 = std::string::npos, c3 = std::string::npos;
    if (c1 != std::string::npos) c2 = line.find(',', c1 + 1);
    if (c2 != std::string::npos) c3 = line.find(',', c2 + 1);
    if (c2 == std::string::npos) throw FormatError("line " + std::to_string(lineno) + ": too few fields");
    const long n = parse_int(line.substr(0, c1), lineno);
    const double s = parse_real(line.substr(c1 + 1, c2 - c1 - 1), lineno);
    const std::string e = c3 == std::string::npos ? line.substr(c2 + 1) : line.substr(c2 + 1, c3 - c2 - 1);
    double v = parse_real(e, lineno);
    std::string prov = c3 == std::string::npos ? "" : trim(line.substr(c3 + 1));
    if (prov.empty()) prov = "external";
    if (have_s && s != t.s) throw FormatError("line " + std::to_string(lineno) + ": mixed s values in one table");
    if (n < 2) throw FormatError("line " + std::to_string(lineno) + ": N must be >= 2");
    if (t.contains(n)) throw FormatError("line " + std::to_string(lineno) + ": duplicate N");
    t.s = s;
    have_s = true;
    if (conventional) v = convert_energy(s, n, v, Conversion::conventional_to_standardized);
    t.set(n, v, prov);
    if (prov.rfind("sobol-lambert", 0) == 0) t.label = "net, not optimal";
  }
  return t;
}

EnergyTable read_energy_table(const std::string& path) {
  auto in = open_in(path);
  return read_energy_table(in);
}

void write_energy_table(const EnergyTable& table, std::ostream& out) {
  out << kTableHeader << '\n';
  for (const auto& [n, r] : table.rows)
    out << n << ',' << format_real(table.s) << ',' << format_real(r.v) << ',' << r.provenance << '\n';
}

void write_energy_table(const EnergyTable& table, const std::string& path) {
  auto out = open_out(path);
  write_energy_table(table, out);
}

Configuration read_configuration(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next = [&]() {
    while (std::getline(in, line)) {
      ++lineno;
      line = trim(line);
      if (!line.empty()) return true;
    }
    return false;
  };
  if (!next()) throw FormatError("empty configuration file");
  const long n = parse_int(line, lineno);
  if (n < 1) throw FormatError("configuration size must be positive");
  std::vector<UnitVector> pts;
  for (long i = 0; i < n; ++i) {
    if (!next()) throw FormatError("configuration ends after " + std::to_string(i) + " of " + std::to_string(n) + " points");
    std::stringstream ss(line);
    std::string a, b, c;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c))
      throw FormatError("line " + std::to_string(lineno) + ": expected x,y,z");
    Vec3 p{parse_real(a, lineno), parse_real(b, lineno), parse_real(c, lineno)};
    const double r = p.norm();
    if (!(std::fabs(r - 1.0) <= 1e-5))
      throw FormatError("line " + std::to_string(lineno) + ": point is off the unit sphere by " + format_real(r - 1.0));
    pts.push_back(r == 1.0 ? p : p * (1.0 / r));
  }
  if (next()) throw FormatError("line " + std::to_string(lineno) + ": more points than announced");
  return Configuration(std::move(pts));
}

Configuration read_configuration(const std::string& path) {
  auto in = open_in(path);
  return read_configuration(in);
}

void write_configuration(const Configuration& c, std::ostream& out) {
  out << c.n() << '\n';
  for (const auto& p : c.points) out << format_real(p.x) << ',' << format_real(p.y) << ',' << format_real(p.z) << '\n';
}

void write_configuration(const Configuration& c, const std::string& path) {
  auto out = open_out(path);
  write_configuration(c, out);
}

}  // namespace riesz
