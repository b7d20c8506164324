#include "helibox/eos.hpp"

#include <cmath>
#include <stdexcept>

#include "helibox/errors.hpp"
#include "helibox/state.hpp"

namespace helibox {

void Eos::validate() const {
  if (!(gamma > 1.0))
    throw ConfigError("eos: gamma must exceed 1, got " + std::to_string(gamma));
  if (kind == EosKind::polytropic && !(K > 0.0))
    throw ConfigError("eos: polytropic constant K must be positive");
}

ScalarField eos_pressure_fields(const Eos& eos, const ScalarField& rho,
                                const ScalarField* e) {
  eos.validate();
  if (eos.kind == EosKind::polytropic) {
    ScalarField out = pow_field(rho, eos.gamma);
    return eos.K == 1.0 ? out : eos.K * out;
  }
  if (e == nullptr)
    throw std::invalid_argument("eos_pressure: ideal gas needs an energy field");
  return (eos.gamma - 1.0) * (rho * *e);
}

ScalarField eos_pressure(const SystemState& state) {
  check_floors(state, "eos_pressure");
  return eos_pressure_fields(state.eos, state.rho,
                             state.e ? &*state.e : nullptr);
}

ScalarField polytropic_head(const Eos& eos, const ScalarField& rho) {
  if (eos.kind != EosKind::polytropic)
    throw std::invalid_argument("polytropic_head: EOS is not polytropic");
  eos.validate();
  const double c = eos.gamma * eos.K / (eos.gamma - 1.0);
  return c * pow_field(rho, eos.gamma - 1.0);
}

} // namespace helibox
