#pragma once

// Reproducible random closed-form field sets for the identity checks. Every
// recipe is a TrigPoly, so values and all derivatives are exact; coefficients
// are dyadic rationals and modes are small integers, keeping the sets well
// inside the dealiasing band of every grid they are sampled on.

#include <cstdint>

#include "helibox/trig_poly.hpp"

namespace helibox {

struct ManufacturedFieldSet {
  TrigPoly rho; // 1 + perturbation, min over the box >= 0.5
  TrigVec u;    // no constraint
  TrigPoly P;   // independent of rho: genuinely non-barotropic
  TrigVec B;    // curl of a random potential: exactly solenoidal
  TrigPoly e;   // >= 0.5, used where an energy field is needed
};

// Deterministic in (seed, mode_budget): the same arguments always produce the
// same recipes. mode_budget is the number of random terms per scalar recipe.
ManufacturedFieldSet generate_fields(std::uint64_t seed, int mode_budget);

} // namespace helibox
