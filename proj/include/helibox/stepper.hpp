#pragma once

// Classical four-stage Runge-Kutta step and the CFL time-step estimate.

#include <functional>

#include "helibox/state.hpp"

namespace helibox {

using RhsFn = std::function<Tendency(const SystemState&)>;

// One RK4 step. `k1`, when given, must be rhs(s) and saves its re-evaluation
// (the driver already computed it for the diagnostics). Density/energy floors
// are re-checked after every stage with the stage index in the fault message.
// ii-euler states get a solenoidal projection of u after the update.
SystemState rk4_step(const SystemState& s, double dt, const RhsFn& rhs,
                     const Tendency* k1 = nullptr);

// dt = cfl * dx / max_grid(|u| + c + c_A), capped at dt_max; dt_max when the
// state is entirely quiescent. c^2 = gamma P / rho (zero for ii-euler),
// c_A = |B| / sqrt(rho).
double cfl_dt(const SystemState& s, double cfl, double dt_max);

} // namespace helibox
