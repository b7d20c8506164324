#include "helibox/rhs.hpp"

#include <stdexcept>

#include "helibox/errors.hpp"
#include "helibox/operators.hpp"
#include "helibox/pressure_solver.hpp"

namespace helibox {

namespace {

void require_kind(const SystemState& s, SystemKind k, const char* fn) {
  if (s.kind != k)
    throw std::invalid_argument(std::string(fn) + ": wrong system kind " +
                                to_string(s.kind));
}

} // namespace

ScalarField advect(const VectorField& u, const ScalarField& s) {
  return dealias(dot(u, gradient(s)));
}

VectorField advect(const VectorField& u, const VectorField& a) {
  VectorField out;
  out.x = dot(u, gradient(a.x));
  out.y = dot(u, gradient(a.y));
  out.z = dot(u, gradient(a.z));
  return dealias(out);
}

Tendency rhs_baro(const SystemState& s) {
  require_kind(s, SystemKind::baro_euler, "rhs_baro");
  check_floors(s, "rhs_baro");

  const ScalarField P = dealias(eos_pressure(s));
  Tendency d;
  d.rho_t = -divergence(dealias(s.rho * s.u));
  // grad P / rho == grad Pi(rho) pointwise; taking the gradient after the
  // band truncation keeps the acceleration an exact in-band gradient, so the
  // discrete helicity integral sees no spurious pressure torque.
  d.u_t = (-1.0) * advect(s.u, s.u) +
          (-1.0) * gradient(dealias(polytropic_head(s.eos, s.rho)));
  d.pressure = P;
  return d;
}

Tendency rhs_ii(const SystemState& s) {
  require_kind(s, SystemKind::ii_euler, "rhs_ii");
  check_floors(s, "rhs_ii");

  Tendency d;
  d.rho_t = -advect(s.u, s.rho);

  // Elliptic right-hand side: -d_i d_j (u_i u_j), term by term.
  ScalarField acc(s.grid_ptr(), Space::physical);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      const ScalarField dd =
          derivative(derivative(dealias(s.u.comp(i) * s.u.comp(j)), i), j);
      axpy(acc, i == j ? 1.0 : 2.0, dd);
    }
  const ScalarField rho_inv = reciprocal(s.rho);
  PressureSolveResult pres = solve_variable_density_pressure(
      rho_inv, -acc, s.pressure_tol, s.pressure_max_iter);

  d.u_t = (-1.0) * advect(s.u, s.u) +
          dealias(rho_inv * ((-1.0) * gradient(pres.P)));
  d.pressure = std::move(pres.P);
  d.pressure_iterations = pres.iterations;
  d.pressure_residual = pres.residual;
  return d;
}

namespace {

// Shared assembly for comp-euler and mhd. The magnetic terms enter through
// exactly two hooks so that a zero B reproduces the comp-euler arithmetic.
Tendency compressible_rhs(const SystemState& s, const char* fn) {
  check_floors(s, fn);
  if (!s.e)
    throw std::invalid_argument(std::string(fn) + ": missing internal energy");

  const ScalarField P = dealias(eos_pressure(s));
  Tendency d;
  d.rho_t = -divergence(dealias(s.rho * s.u));

  VectorField bracket = (-1.0) * gradient(P); // (curl B) x B - grad P
  if (s.B)
    bracket = cross(curl(*s.B), *s.B) + bracket;
  const ScalarField rho_inv = reciprocal(s.rho);
  d.u_t = (-1.0) * advect(s.u, s.u) + dealias(rho_inv * bracket);

  const ScalarField divu = divergence(s.u);
  d.e_t = (-1.0) * advect(s.u, *s.e) + (-1.0) * dealias((rho_inv * P) * divu);

  if (s.B)
    d.B_t = curl(dealias(cross(s.u, *s.B)));

  d.pressure = P;
  return d;
}

} // namespace

Tendency rhs_comp(const SystemState& s) {
  require_kind(s, SystemKind::comp_euler, "rhs_comp");
  return compressible_rhs(s, "rhs_comp");
}

Tendency rhs_mhd(const SystemState& s) {
  require_kind(s, SystemKind::mhd, "rhs_mhd");
  if (!s.B)
    throw std::invalid_argument("rhs_mhd: missing magnetic field");
  return compressible_rhs(s, "rhs_mhd");
}

Tendency compute_rhs(const SystemState& s) {
  switch (s.kind) {
  case SystemKind::baro_euler: return rhs_baro(s);
  case SystemKind::ii_euler: return rhs_ii(s);
  case SystemKind::comp_euler: return rhs_comp(s);
  case SystemKind::mhd: return rhs_mhd(s);
  }
  throw std::invalid_argument("compute_rhs: unknown system kind");
}

} // namespace helibox
