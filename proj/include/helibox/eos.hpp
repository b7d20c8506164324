#pragma once

// Equations of state. The barotropic system closes with P = K rho^gamma;
// the energy-carrying systems use an ideal gas, P = (gamma - 1) rho e.

#include "helibox/field.hpp"

namespace helibox {

enum class EosKind { polytropic, ideal_gas };

struct Eos {
  EosKind kind = EosKind::polytropic;
  double gamma = 5.0 / 3.0;
  double K = 1.0; // polytropic constant, unused for ideal gas

  void validate() const;
};

struct SystemState; // state.hpp

// Pressure from the state's own EOS. Enforces the density floor (and e >= 0
// for ideal gas); a violation raises FloorError with the grid location.
ScalarField eos_pressure(const SystemState& state);
ScalarField eos_pressure_fields(const Eos& eos, const ScalarField& rho,
                                const ScalarField* e);

// Pressure head Pi(rho) = integral_0^rho P'(s)/s ds for the polytropic EOS:
// Pi = gamma K / (gamma - 1) * rho^(gamma-1). Satisfies grad Pi = grad P / rho.
ScalarField polytropic_head(const Eos& eos, const ScalarField& rho);

} // namespace helibox
