#pragma once

// Instantaneous right-hand sides of the four systems. Every nonlinear term
// is formed pointwise and then sharply truncated (2/3 rule), so prognostic
// fields that start band-limited stay band-limited.
//
//   baro : d.rho = -div(rho u)
//          d.u   = -u.grad u - rho^{-1} grad P,        P = K rho^gamma
//   ii   : d.rho = -u.grad rho
//          d.u   = -u.grad u - rho^{-1} grad P,        P from the elliptic
//                  solve div(rho^{-1} grad P) = -dd_ij(u_i u_j)
//   comp : d.rho = -div(rho u)
//          d.u   = -u.grad u - rho^{-1} grad P,        P = (gamma-1) rho e
//          d.e   = -u.grad e - rho^{-1} P div u
//   mhd  : comp plus the Lorentz force rho^{-1}[(curl B) x B] inside the
//          momentum bracket and d.B = curl(u x B), whose divergence vanishes
//          identically on the grid.

#include "helibox/state.hpp"

namespace helibox {

Tendency rhs_baro(const SystemState& s);
Tendency rhs_ii(const SystemState& s);
Tendency rhs_comp(const SystemState& s);
Tendency rhs_mhd(const SystemState& s);

// Dispatch on s.kind.
Tendency compute_rhs(const SystemState& s);

// (u . grad) a and (u . grad) s, dealiased; shared with the diagnostics.
VectorField advect(const VectorField& u, const VectorField& a);
ScalarField advect(const VectorField& u, const ScalarField& s);

} // namespace helibox
