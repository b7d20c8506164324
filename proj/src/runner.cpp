#include "helibox/runner.hpp"

#include <algorithm>
#include <cmath>

#include "helibox/initial_conditions.hpp"
#include "helibox/operators.hpp"
#include "helibox/rhs.hpp"
#include "helibox/stepper.hpp"

namespace helibox {

RunResult run_simulation(const RunConfig& cfg, const ReportSink& sink) {
  cfg.validate();

  const GridPtr grid = make_grid(cfg.n, cfg.L);
  SystemState state =
      make_initial_state(cfg.system, grid, cfg.eos, cfg.ic, cfg.rho_floor);
  state.pressure_tol = cfg.pressure_tol;
  state.pressure_max_iter = cfg.pressure_max_iter;

  RunResult result;
  result.series.system = cfg.system;
  result.series.n = cfg.n;
  result.series.L = cfg.L;

  const double q0_maxnorm = max_norm(potential_vorticity(state));
  const double E0_initial = energies(state).E0;

  const double t_eps = 1e-12 * std::max(1.0, cfg.t_end);
  long step = 0;
  for (;;) {
    const Tendency tend = compute_rhs(state);
    const bool at_end = state.t >= cfg.t_end - t_eps;
    if (at_end || step % cfg.output_stride == 0) {
      const BudgetReport row = make_report(state, tend, q0_maxnorm,
                                           E0_initial);
      result.series.reports.push_back(row);
      if (sink)
        sink(row);
    }
    if (at_end)
      break;

    double dt = cfl_dt(state, cfg.cfl, cfg.dt_max);
    if (state.t + dt > cfg.t_end)
      dt = cfg.t_end - state.t;
    state = rk4_step(state, dt, compute_rhs, &tend);
    ++step;
  }

  result.final_state = std::move(state);
  result.steps_taken = step;
  return result;
}

} // namespace helibox
