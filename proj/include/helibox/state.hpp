#pragma once

#include <optional>
#include <string>

#include "helibox/eos.hpp"
#include "helibox/field.hpp"

namespace helibox {

// The four flow systems. "baro" is compressible flow with a barotropic
// pressure law; "ii" is inhomogeneous (variable-density) incompressible flow;
// "comp" is fully compressible flow with an energy equation; "mhd" adds a
// magnetic field with the induction equation.
enum class SystemKind { baro_euler, ii_euler, comp_euler, mhd };

std::string to_string(SystemKind k);
SystemKind system_from_string(const std::string& name);

// Prognostic fields, all physical-space samples. e is present for comp/mhd,
// B for mhd only.
struct SystemState {
  SystemKind kind = SystemKind::baro_euler;
  double t = 0.0;
  Eos eos;
  double rho_floor = 1e-6;
  // Elliptic-solve controls consumed by the ii-euler right-hand side.
  double pressure_tol = 1e-10;
  int pressure_max_iter = 500;
  ScalarField rho;
  VectorField u;
  std::optional<ScalarField> e;
  std::optional<VectorField> B;

  const Grid& grid() const { return rho.grid(); }
  const GridPtr& grid_ptr() const { return rho.grid_ptr(); }
};

// Time derivative of the prognostic fields, plus the pressure that was used
// to form du (diagnosed for ii-euler, EOS-evaluated otherwise).
struct Tendency {
  ScalarField rho_t;
  VectorField u_t;
  std::optional<ScalarField> e_t;
  std::optional<VectorField> B_t;
  ScalarField pressure;
  int pressure_iterations = 0;
  double pressure_residual = 0.0;
};

// Throws FloorError naming the first offending cell if rho < rho_floor
// anywhere, or e < 0 where an energy field exists.
void check_floors(const SystemState& state, const std::string& where);

// state + c * tend on all prognostic fields; t advances by dt_shift.
SystemState add_scaled(const SystemState& state, const Tendency& tend, double c,
                       double dt_shift);

} // namespace helibox
