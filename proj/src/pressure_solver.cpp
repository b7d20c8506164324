#include "helibox/pressure_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "helibox/errors.hpp"
#include "helibox/operators.hpp"

namespace helibox {

PressureSolveResult solve_variable_density_pressure(const ScalarField& rho_inv,
                                                    const ScalarField& rhs,
                                                    double tol_rel,
                                                    int max_iter) {
  require_same_grid(rho_inv, rhs);
  require_physical(rho_inv, "solve_variable_density_pressure");
  require_physical(rhs, "solve_variable_density_pressure");
  const GridPtr& g = rhs.grid_ptr();

  const double rhs_scale = max_norm(rhs);
  PressureSolveResult out;
  if (rhs_scale == 0.0) {
    out.P = ScalarField(g, Space::physical);
    return out;
  }
  const double tol = tol_rel * rhs_scale;

  const double alpha = mean_value(rho_inv);
  const ScalarField r = rho_inv + (-alpha);
  const double contraction = max_norm(r) / alpha;
  if (contraction >= 1.0)
    throw SolverError("pressure solve: density contrast too large, "
                      "max|rho^{-1} - mean| / mean = " +
                      std::to_string(contraction));

  // P_0 from r = 0; then alpha lap P_m equals the forcing used to build P_m,
  // so each iteration gets the exact residual of the previous iterate for
  // the cost of one div(r grad P).
  ScalarField forcing = rhs;                                   // alpha lap P_m
  ScalarField P = (1.0 / alpha) * inverse_laplacian_zero_mean(forcing);

  for (int iter = 1; iter <= max_iter; ++iter) {
    const ScalarField div_w = divergence(dealias(r * gradient(P)));
    const double res = max_norm(forcing + div_w - rhs);
    if (res <= tol) {
      out.P = std::move(P);
      out.iterations = iter - 1;
      out.residual = res;
      return out;
    }
    forcing = rhs - div_w;
    P = (1.0 / alpha) * inverse_laplacian_zero_mean(forcing);
  }
  throw SolverError("pressure solve: no convergence in " +
                    std::to_string(max_iter) + " iterations (contraction " +
                    std::to_string(contraction) + ")");
}

} // namespace helibox
