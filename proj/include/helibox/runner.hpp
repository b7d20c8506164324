#pragma once

// Time integration driver: builds the initial state from a RunConfig,
// advances it with RK4 under a CFL-limited step, and emits one diagnostic
// row per reported step.  Rows are pushed through the sink as soon as they
// are computed so a caller that writes them to disk keeps the partial
// series even when a later step throws.
//
// Reporting policy: the state at t = 0 is always reported, then every
// output_stride-th step, and the final state at t_end is always reported.
// The last step is shortened so the run lands on t_end exactly.

#include <functional>

#include "helibox/config.hpp"
#include "helibox/diagnostics.hpp"
#include "helibox/state.hpp"
#include "helibox/timeseries.hpp"

namespace helibox {

struct RunResult {
  SystemState final_state;
  TimeSeries series;
  long steps_taken = 0;
};

using ReportSink = std::function<void(const BudgetReport&)>;

RunResult run_simulation(const RunConfig& cfg, const ReportSink& sink = {});

} // namespace helibox
