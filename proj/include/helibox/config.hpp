#pragma once

// Run configuration, loaded from a small INI dialect:
//
//   [run]
//   system = ii          ; baro | ii | comp | mhd
//   n = 32               ; grid points per axis (even, >= 8)
//   L = 6.283185307179586
//   t_end = 0.5
//   cfl = 0.25
//   dt_max = 0.1
//   output_stride = 1    ; report every k-th step (>= 1)
//   lambda_window = 0    ; averaging window for the length-scale report;
//                        ; 0 means the full simulated span
//
//   [eos]
//   kind = polytropic    ; polytropic | ideal-gas
//   gamma = 2.0
//   K = 1.0
//
//   [ic]
//   name = abc           ; abc | taylor-green | acoustic | orszag-tang
//   A = 1.0  B = 1.0  C = 1.0
//   rho0 = 1.0  rho_eps = 0.3  rho_axis = z
//   comp_amp = 0.0
//   e0 = 1.0  e_eps = 0.0
//   amp = 1e-3           ; acoustic wave amplitude
//   b0 = 1.0  ot_delta = 0.2
//
//   [solver]
//   pressure_tol = 1e-10
//   pressure_max_iter = 500
//   rho_floor = 1e-6
//
// Comments start with '#' or ';'.  Unknown sections or keys are rejected
// with the offending line number so that typos never silently fall back to
// defaults.  Every key is optional; [run] system defaults to "ii".

#include <iosfwd>
#include <string>

#include "helibox/eos.hpp"
#include "helibox/initial_conditions.hpp"
#include "helibox/state.hpp"

namespace helibox {

struct RunConfig {
  SystemKind system = SystemKind::ii_euler;
  int n = 32;
  double L = 6.283185307179586;
  double t_end = 0.5;
  double cfl = 0.25;
  double dt_max = 0.1;
  int output_stride = 1;
  double lambda_window = 0.0; // 0 => full span

  Eos eos;
  IcParams ic;

  double pressure_tol = 1e-10;
  int pressure_max_iter = 500;
  double rho_floor = 1e-6;

  // Throws ConfigError when any value is out of range or the EOS kind does
  // not fit the system (polytropic for baro, ideal-gas for comp/mhd).
  void validate() const;
};

RunConfig parse_config(std::istream& in, const std::string& name);
RunConfig load_config(const std::string& path);

} // namespace helibox
