#pragma once

// Elliptic solve for the incompressible variable-density pressure:
//
//   div( rho^{-1} grad P ) = rhs,   mean(P) = 0.
//
// Splitting rho^{-1} = alpha + r with alpha = mean(rho^{-1}) gives the
// fixed-point iteration
//
//   alpha lap P_{m+1} = rhs - div( dealias( r grad P_m ) ),
//
// a contraction whenever max|r| < alpha (density contrast below 2:1 or so).
// Iterations stop when the true residual max-norm drops under
// tol_rel * max|rhs|; exceeding max_iter raises SolverError.

#include "helibox/field.hpp"

namespace helibox {

struct PressureSolveResult {
  ScalarField P; // zero-mean, physical space
  int iterations = 0;
  double residual = 0.0; // max|div(rho^{-1} grad P) - rhs| at exit
};

PressureSolveResult solve_variable_density_pressure(const ScalarField& rho_inv,
                                                    const ScalarField& rhs,
                                                    double tol_rel = 1e-10,
                                                    int max_iter = 500);

} // namespace helibox
