#pragma once

// Canonical initial states. Formulas (k0 = 2*pi/L):
//
//  abc           u = ( A sin(k0 z) + C cos(k0 y),
//                      B sin(k0 x) + A cos(k0 z),
//                      C sin(k0 y) + B cos(k0 x) )
//                optionally plus a curl-free compressive part
//                comp_amp * (sin(k0 x), sin(k0 y), sin(k0 z)).
//                With A = B = C the flow is Beltrami: curl u = k0 u.
//  taylor-green  u = A ( sin(k0 x) cos(k0 y) cos(k0 z),
//                       -cos(k0 x) sin(k0 y) cos(k0 z), 0 )
//  acoustic      right-moving simple wave on a uniform background:
//                rho = rho0 (1 + amp cos(k0 x)), u_x = c0 amp cos(k0 x),
//                P = P0 + rho0 c0^2 amp cos(k0 x), e = P / ((gamma-1) rho)
//  orszag-tang   u = A (-sin(k0 y), sin(k0 x), ot_delta sin(k0 z)),
//                B = b0 (-sin(k0 y), sin(2 k0 x), cos(k0 x))
//
// Density modulation (abc, taylor-green, orszag-tang):
//   rho = rho0 (1 + rho_eps sin(k0 * coordinate rho_axis)).
// Internal energy where present: e = e0 (1 + e_eps sin(k0 y)).

#include <string>

#include "helibox/state.hpp"

namespace helibox {

struct IcParams {
  std::string name = "abc";
  double A = 1.0, B = 1.0, C = 1.0; // abc amplitudes / taylor-green scale
  double rho0 = 1.0;
  double rho_eps = 0.0;
  char rho_axis = 'z';
  double comp_amp = 0.0; // curl-free compressive amplitude (abc only)
  double e0 = 1.0;
  double e_eps = 0.0;
  double amp = 1e-3;     // acoustic perturbation amplitude
  double b0 = 1.0;       // magnetic amplitude (mhd)
  double ot_delta = 0.2; // z-velocity of the 3-d orszag-tang extension
};

// Builds a valid state for the given system or throws ConfigError when the
// combination is not supported (e.g. a compressive IC for ii-euler).
SystemState make_initial_state(SystemKind kind, const GridPtr& grid,
                               const Eos& eos, const IcParams& ic,
                               double rho_floor = 1e-6);

} // namespace helibox
