#include "helibox/timeseries.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "helibox/errors.hpp"

namespace helibox {

namespace {

constexpr const char* k_columns =
    "t,H,E0,E,E0B,dHdt_source,dHdt_direct,q_maxnorm,residual_maxnorm,"
    "residual_l2,bound_rhs,divu_l1,mass";
constexpr int k_column_count = 13;

std::vector<double> row_values(const BudgetReport& r) {
  return {r.t,
          r.H,
          r.E0,
          r.E,
          r.E0B,
          r.dHdt_source,
          r.dHdt_direct,
          r.q_maxnorm,
          r.residual_maxnorm,
          r.residual_l2,
          r.bound_rhs,
          r.divu_l1,
          r.mass};
}

BudgetReport report_from_values(const std::vector<double>& v,
                                SystemKind kind) {
  BudgetReport r;
  r.kind = kind;
  r.t = v[0];
  r.H = v[1];
  r.E0 = v[2];
  r.E = v[3];
  r.E0B = v[4];
  r.dHdt_source = v[5];
  r.dHdt_direct = v[6];
  r.q_maxnorm = v[7];
  r.residual_maxnorm = v[8];
  r.residual_l2 = v[9];
  r.bound_rhs = v[10];
  r.divu_l1 = v[11];
  r.mass = v[12];
  return r;
}

[[noreturn]] void fail(const std::string& name, int line,
                       const std::string& what) {
  std::ostringstream os;
  os << name << ":" << line << ": " << what;
  throw ConfigError(os.str());
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  cells.push_back(cur);
  return cells;
}

} // namespace

std::string format_cell(double v) {
  if (std::isnan(v))
    return std::string();
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

void write_timeseries_header(std::ostream& out, SystemKind system, int n,
                             double L) {
  out << "# helibox-timeseries v1 system=" << to_string(system)
      << " n=" << n << " L=" << format_cell(L) << "\n";
  out << k_columns << "\n";
}

void write_timeseries_row(std::ostream& out, const BudgetReport& row) {
  const std::vector<double> vals = row_values(row);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i != 0)
      out << ',';
    out << format_cell(vals[i]);
  }
  out << "\n";
}

void write_timeseries_csv(std::ostream& out, const TimeSeries& ts) {
  write_timeseries_header(out, ts.system, ts.n, ts.L);
  for (const BudgetReport& r : ts.reports)
    write_timeseries_row(out, r);
}

void write_timeseries_csv(const std::string& path, const TimeSeries& ts) {
  std::ofstream out(path, std::ios::binary); // '\n' endings on any platform
  if (!out)
    throw ConfigError("cannot open '" + path + "' for writing");
  write_timeseries_csv(out, ts);
  out.flush();
  if (!out)
    throw ConfigError("failed while writing '" + path + "'");
}

TimeSeries read_timeseries_csv(std::istream& in, const std::string& name) {
  TimeSeries ts;
  std::string line;
  int lineno = 0;

  if (!std::getline(in, line))
    fail(name, 1, "empty file");
  ++lineno;
  {
    std::istringstream hs(line);
    std::string magic, version, kv;
    hs >> magic >> version;
    if (magic != "#" || version != "helibox-timeseries")
      fail(name, lineno, "not a helibox timeseries file");
    std::string v1;
    hs >> v1;
    if (v1 != "v1")
      fail(name, lineno, "unsupported version '" + v1 + "'");
    bool have_system = false, have_n = false, have_L = false;
    while (hs >> kv) {
      const std::size_t eq = kv.find('=');
      if (eq == std::string::npos)
        fail(name, lineno, "malformed header token '" + kv + "'");
      const std::string key = kv.substr(0, eq);
      const std::string value = kv.substr(eq + 1);
      try {
        if (key == "system") {
          ts.system = system_from_string(value);
          have_system = true;
        } else if (key == "n") {
          ts.n = std::stoi(value);
          have_n = true;
        } else if (key == "L") {
          ts.L = std::stod(value);
          have_L = true;
        } else {
          fail(name, lineno, "unknown header key '" + key + "'");
        }
      } catch (const ConfigError&) {
        throw;
      } catch (const std::exception& e) {
        fail(name, lineno, std::string("bad header value: ") + e.what());
      }
    }
    if (!have_system || !have_n || !have_L)
      fail(name, lineno, "header must carry system=, n=, L=");
  }

  if (!std::getline(in, line))
    fail(name, lineno + 1, "missing column header");
  ++lineno;
  if (line != k_columns)
    fail(name, lineno, "unexpected column header");

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      continue;
    const std::vector<std::string> cells = split_cells(line);
    if (static_cast<int>(cells.size()) != k_column_count)
      fail(name, lineno, "expected " + std::to_string(k_column_count) +
                             " cells, got " + std::to_string(cells.size()));
    std::vector<double> vals(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].empty()) {
        vals[i] = std::numeric_limits<double>::quiet_NaN();
        continue;
      }
      // strtod instead of stod: subnormals written by %.17g must read back
      // (stod raises out_of_range on the ERANGE underflow).
      char* end = nullptr;
      vals[i] = std::strtod(cells[i].c_str(), &end);
      if (end != cells[i].c_str() + cells[i].size())
        fail(name, lineno, "bad number '" + cells[i] + "'");
    }
    ts.reports.push_back(report_from_values(vals, ts.system));
  }
  return ts;
}

TimeSeries read_timeseries_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ConfigError("cannot open timeseries file '" + path + "'");
  return read_timeseries_csv(in, path);
}

} // namespace helibox
