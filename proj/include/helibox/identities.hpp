#pragma once

// Pointwise algebraic identities behind the budget relations, checked on
// manufactured closed-form fields with every derivative taken analytically.
// The residuals therefore measure floating-point rounding only and are
// grid-size independent.
//
//   pressure-perfect-divergence  rho w.grad P - u.(grad rho x grad P)
//                                  = div{ P curl(rho u) }
//   helicity-source-split        rho^2 w.grad(|u|^2/2)
//                                  = div{ w rho^2 |u|^2 / 2 } - q rho |u|^2
//   ertel-material-invariance    dt q + u.grad q + q div u
//                                  + [grad(rho^{-1}) x grad P].grad rho = 0,
//                                dt composed from the momentum/density laws
//   cross-helicity-budget        dt h_c + h_c div u + div J_c
//                                  + q_c |u|^2 / 2 = 0, dt composed from the
//                                momentum/induction laws
//   barotropic-gradient-alignment  grad(rho^{-1}) x grad(K rho^gamma) = 0

#include <string>
#include <vector>

#include "helibox/manufactured.hpp"

namespace helibox {

enum class IdentityId {
  pressure_perfect_divergence,
  helicity_source_split,
  ertel_material_invariance,
  cross_helicity_budget,
  barotropic_gradient_alignment,
};

const std::vector<IdentityId>& identity_catalogue();
std::string identity_name(IdentityId id);

struct IdentityResult {
  IdentityId id{};
  std::string name;
  int n = 0;
  std::uint64_t seed = 0;
  double residual = 0.0;  // max-norm of LHS - RHS
  double scale = 0.0;     // max-norm of the largest constituent term
  double tolerance = 0.0; // 1e-11 * scale
  bool pass = false;
};

IdentityResult verify_identity(IdentityId id, const ManufacturedFieldSet& f,
                               const GridPtr& g);

// Every catalogue identity over seed_count random sets at n in {32, 64}.
std::vector<IdentityResult> verify_all_identities(int seed_count);

} // namespace helibox
