#pragma once

// Helicity/energy bookkeeping for the four systems.
//
// Per system the tracked helicity density, flux, and source are
//
//   baro : h   = u.w                 J = h u + w (Pi - |u|^2/2)        sig = 0
//   ii   : h_r = (rho u).curl(rho u) J = h_r u + P curl(rho u)
//                                        - w rho^2 |u|^2 / 2          sig = -q rho |u|^2
//   comp : as ii                                                      sig = -q rho |u|^2 - 2 h_r div u
//   mhd  : h_c = rho u.B             J = h_c u + B (P - rho |u|^2/2)  sig = -q_c |u|^2/2 - h_c div u
//
// with w = curl u, q = w.grad rho, q_c = B.grad rho, and Pi the barotropic
// pressure head. Each satisfies dt h + div J = sig; budget_residual measures
// the grid's defect in that relation with dt h composed exactly from the
// tendency (product rule), so it contains no time-discretization error.
//
// The integrated laws:
//   baro : dH/dt = 0
//   ii   : dH/dt = -2 int q E0dens
//   comp : dH/dt = -2 int q E0dens - 2 int h_r div u
//   mhd  : dHc/dt = -1/2 int q_c |u|^2 - int h_c div u
// dhdt_source evaluates the right side from the state alone (no pressure
// anywhere); dhdt_direct integrates the composed dt h.
//
// Growth bounds:  ii  : |dH/dt| <= 2 ||q0||_inf E0(0)
//                 comp: |dH/dt| <= 2 ||q||_inf E0 + 2 ||h_r||_inf int|div u|
// and the helicity length scale
//   lambda_inv = ( <|dH/dt|> / (varrho0^{1/2} E0^{3/2}) )^{2/7}
//             <= (4 / (E0 varrho0))^{1/7} ||q0||_inf^{2/7}   (ii only),
// with <.> a trapezoid average over the window and E0, varrho0, q0 at t=0.

#include <vector>

#include "helibox/state.hpp"

namespace helibox {

ScalarField helicity_density(const SystemState& s);
ScalarField potential_vorticity(const SystemState& s); // q, or q_c for mhd

struct Energies {
  double E0;  // int rho |u|^2 / 2
  double E;   // int rho (|u|^2/2 + e)   (NaN without an energy field)
  double E0B; // E + int |B|^2 / 2       (NaN without a magnetic field)
};
Energies energies(const SystemState& s);

struct FluxSource {
  VectorField J;
  ScalarField sigma;
};
FluxSource flux_and_source(const SystemState& s, const Tendency& d);

// dt h + div J - sig with dt h composed from the tendency.
ScalarField budget_residual(const SystemState& s, const Tendency& d);

double dhdt_source(const SystemState& s);
double dhdt_direct(const SystemState& s, const Tendency& d);

// Defect of the potential-vorticity law:
//   ii        : dt q + u.grad q
//   baro/comp : dt q + div(q u) + div(w rho div u)
//   mhd       : dt q_c + div(u q_c) + div(rho div u B)
ScalarField pv_budget_residual(const SystemState& s, const Tendency& d);

// Defect of the energy law dt Edens + div{(Edens + P) u} = 0 with
//   baro : Edens = rho |u|^2/2 + P/(gamma-1)
//   ii   : Edens = rho |u|^2/2
//   comp : Edens = rho (|u|^2/2 + e)
//   mhd  : Edens = rho (|u|^2/2 + e) + |B|^2/2, flux gains
//          |B|^2 u / 2 - (u.B) B
ScalarField energy_budget_residual(const SystemState& s, const Tendency& d);

// One CSV row. NaN marks a column that does not apply to the system.
struct BudgetReport {
  SystemKind kind = SystemKind::baro_euler;
  double t = 0.0;
  double H = 0.0;
  double E0 = 0.0;
  double E = 0.0;
  double E0B = 0.0;
  double dHdt_source = 0.0;
  double dHdt_direct = 0.0;
  double q_maxnorm = 0.0;
  double residual_maxnorm = 0.0;
  double residual_l2 = 0.0;
  double bound_rhs = 0.0;
  double divu_l1 = 0.0;
  double mass = 0.0;
};

// q0_maxnorm and E0_initial are the t=0 values feeding the ii growth bound.
BudgetReport make_report(const SystemState& s, const Tendency& d,
                         double q0_maxnorm, double E0_initial);

struct GrowthBound {
  bool applicable = false; // bounds exist for ii-euler and comp-euler only
  double bound = 0.0;
  double margin = 0.0; // bound - |dHdt_source|
  bool pass = true;    // margin >= -1e-8 * bound (vacuous when inapplicable)
};
GrowthBound growth_bound_check(const BudgetReport& r);

struct LambdaReport {
  double T = 0.0;             // realized averaging window
  double mean_abs_dHdt = 0.0; // trapezoid of |dHdt_source| over [0, T] / T
  double varrho0 = 0.0;       // mean density at t=0
  double lambda_inv = 0.0;
  double lambda_inv_bound = 0.0; // (4/(E0 varrho0))^{1/7} ||q0||^{2/7}
  bool bound_applicable = false; // ii-euler only
  bool pass = true;
};
// window_T <= 0 selects the full span. Needs >= 3 reports.
LambdaReport lambda_h(const std::vector<BudgetReport>& series, double window_T,
                      double L);

} // namespace helibox
