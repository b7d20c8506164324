#pragma once

// Diagnostic time series and its on-disk CSV form.
//
// Layout:
//   # helibox-timeseries v1 system=<name> n=<n> L=<value>
//   t,H,E0,E,E0B,dHdt_source,dHdt_direct,q_maxnorm,residual_maxnorm,
//   residual_l2,bound_rhs,divu_l1,mass          (one header line, no wrap)
//   <rows ...>
//
// Values are printed with %.17g so a written file reproduces the doubles
// bit-for-bit on read-back.  Quantities that do not apply to a system
// (e.g. the internal-energy total for the incompressible model) are NaN in
// memory and empty cells on disk.

#include <iosfwd>
#include <string>
#include <vector>

#include "helibox/diagnostics.hpp"
#include "helibox/state.hpp"

namespace helibox {

struct TimeSeries {
  SystemKind system = SystemKind::ii_euler;
  int n = 0;
  double L = 0.0;
  std::vector<BudgetReport> reports;
};

void write_timeseries_csv(std::ostream& out, const TimeSeries& ts);
void write_timeseries_csv(const std::string& path, const TimeSeries& ts);

// Appends a single row; used by the streaming runner.  The header must have
// been written first via write_timeseries_header.
void write_timeseries_header(std::ostream& out, SystemKind system, int n,
                             double L);
void write_timeseries_row(std::ostream& out, const BudgetReport& row);

TimeSeries read_timeseries_csv(std::istream& in, const std::string& name);
TimeSeries read_timeseries_csv(const std::string& path);

// Shared %.17g formatting for a double; NaN becomes the empty string.
std::string format_cell(double v);

} // namespace helibox
