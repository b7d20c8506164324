#include "helibox/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "helibox/operators.hpp"
#include "helibox/rhs.hpp"

namespace helibox {

namespace {

constexpr double nan_cell = std::numeric_limits<double>::quiet_NaN();

// dealias(rho u): the momentum field whose self-linkage is tracked for
// ii/comp, and whose alignment with B is tracked for mhd.
VectorField momentum(const SystemState& s) { return dealias(s.rho * s.u); }

// d/dt of momentum(), composed by the product rule.
VectorField momentum_dt(const SystemState& s, const Tendency& d) {
  return dealias(s.rho * d.u_t + d.rho_t * s.u);
}

bool uses_momentum_helicity(SystemKind k) {
  return k == SystemKind::ii_euler || k == SystemKind::comp_euler;
}

// dt h composed exactly from the tendency (no time differencing).
ScalarField helicity_density_dt(const SystemState& s, const Tendency& d) {
  if (s.kind == SystemKind::baro_euler) {
    const VectorField w = curl(s.u);
    return dealias(dot(d.u_t, w) + dot(s.u, curl(d.u_t)));
  }
  const VectorField m = momentum(s);
  const VectorField mt = momentum_dt(s, d);
  if (uses_momentum_helicity(s.kind))
    return dealias(dot(mt, curl(m)) + dot(m, curl(mt)));
  // mhd
  return dealias(dot(mt, *s.B) + dot(m, *d.B_t));
}

} // namespace

ScalarField helicity_density(const SystemState& s) {
  if (s.kind == SystemKind::baro_euler)
    return dealias(dot(s.u, curl(s.u)));
  const VectorField m = momentum(s);
  if (uses_momentum_helicity(s.kind))
    return dealias(dot(m, curl(m)));
  return dealias(dot(m, *s.B));
}

ScalarField potential_vorticity(const SystemState& s) {
  const VectorField& dir = s.kind == SystemKind::mhd ? *s.B : s.u;
  const VectorField g = gradient(s.rho);
  if (s.kind == SystemKind::mhd)
    return dealias(dot(dir, g));
  return dealias(dot(curl(dir), g));
}

Energies energies(const SystemState& s) {
  Energies out{0.0, nan_cell, nan_cell};
  const ScalarField ke = s.rho * magnitude_squared(s.u);
  out.E0 = 0.5 * volume_integral(ke);
  if (s.e)
    out.E = out.E0 + volume_integral(s.rho * (*s.e));
  if (s.B)
    out.E0B = out.E + 0.5 * volume_integral(magnitude_squared(*s.B));
  return out;
}

FluxSource flux_and_source(const SystemState& s, const Tendency& d) {
  const ScalarField mag2 = magnitude_squared(s.u);
  FluxSource out;

  if (s.kind == SystemKind::baro_euler) {
    const VectorField w = curl(s.u);
    const ScalarField h = helicity_density(s);
    const ScalarField head = polytropic_head(s.eos, s.rho);
    out.J = dealias(h * s.u + (head + (-0.5) * mag2) * w);
    out.sigma = ScalarField(s.grid_ptr(), Space::physical); // identically 0
    return out;
  }

  if (s.kind == SystemKind::mhd) {
    const ScalarField h = helicity_density(s);
    const ScalarField qc = potential_vorticity(s);
    const ScalarField divu = divergence(s.u);
    out.J = dealias(h * s.u + (d.pressure + (-0.5) * (s.rho * mag2)) * (*s.B));
    out.sigma = dealias((-0.5) * (qc * mag2) + (-1.0) * (h * divu));
    return out;
  }

  // ii-euler and comp-euler share flux and the -q rho |u|^2 source.
  const VectorField m = momentum(s);
  const VectorField w = curl(s.u);
  const ScalarField h = dealias(dot(m, curl(m)));
  const ScalarField q = potential_vorticity(s);
  out.J = dealias(h * s.u + d.pressure * curl(m) +
                  (-0.5) * ((s.rho * s.rho) * mag2) * w);
  ScalarField sig = (-1.0) * (q * (s.rho * mag2));
  if (s.kind == SystemKind::comp_euler)
    sig = sig + (-2.0) * (h * divergence(s.u));
  out.sigma = dealias(sig);
  return out;
}

ScalarField budget_residual(const SystemState& s, const Tendency& d) {
  const FluxSource fs = flux_and_source(s, d);
  return helicity_density_dt(s, d) + divergence(fs.J) - fs.sigma;
}

double dhdt_source(const SystemState& s) {
  switch (s.kind) {
  case SystemKind::baro_euler:
    return 0.0;
  case SystemKind::ii_euler: {
    const ScalarField q = potential_vorticity(s);
    return -volume_integral(q * (s.rho * magnitude_squared(s.u)));
  }
  case SystemKind::comp_euler: {
    const ScalarField q = potential_vorticity(s);
    const ScalarField h = helicity_density(s);
    return -volume_integral(q * (s.rho * magnitude_squared(s.u))) -
           2.0 * volume_integral(h * divergence(s.u));
  }
  case SystemKind::mhd: {
    const ScalarField qc = potential_vorticity(s);
    const ScalarField h = helicity_density(s);
    return -0.5 * volume_integral(qc * magnitude_squared(s.u)) -
           volume_integral(h * divergence(s.u));
  }
  }
  throw std::invalid_argument("dhdt_source: unknown system kind");
}

double dhdt_direct(const SystemState& s, const Tendency& d) {
  return volume_integral(helicity_density_dt(s, d));
}

ScalarField pv_budget_residual(const SystemState& s, const Tendency& d) {
  const ScalarField q = potential_vorticity(s);
  const VectorField grad_rho = gradient(s.rho);
  const VectorField grad_rho_t = gradient(d.rho_t);

  ScalarField q_t =
      s.kind == SystemKind::mhd
          ? dealias(dot(*d.B_t, grad_rho) + dot(*s.B, grad_rho_t))
          : dealias(dot(curl(d.u_t), grad_rho) + dot(curl(s.u), grad_rho_t));

  if (s.kind == SystemKind::ii_euler)
    return q_t + advect(s.u, q);

  const ScalarField divu = divergence(s.u);
  const VectorField carrier = s.kind == SystemKind::mhd ? *s.B : curl(s.u);
  return q_t + divergence(dealias(q * s.u)) +
         divergence(dealias((s.rho * divu) * carrier));
}

ScalarField energy_budget_residual(const SystemState& s, const Tendency& d) {
  const ScalarField mag2 = magnitude_squared(s.u);
  const ScalarField udot = dot(s.u, d.u_t);
  const ScalarField& P = d.pressure;

  switch (s.kind) {
  case SystemKind::baro_euler: {
    const ScalarField head = polytropic_head(s.eos, s.rho);
    const ScalarField edens =
        0.5 * (s.rho * mag2) + (1.0 / (s.eos.gamma - 1.0)) * P;
    const ScalarField edens_t =
        dealias(0.5 * (mag2 * d.rho_t) + s.rho * udot + head * d.rho_t);
    return edens_t + divergence(dealias((edens + P) * s.u));
  }
  case SystemKind::ii_euler: {
    const ScalarField edens = 0.5 * (s.rho * mag2);
    const ScalarField edens_t = dealias(0.5 * (mag2 * d.rho_t) + s.rho * udot);
    return edens_t + divergence(dealias((edens + P) * s.u));
  }
  case SystemKind::comp_euler: {
    const ScalarField spec_en = 0.5 * mag2 + *s.e;
    const ScalarField edens = s.rho * spec_en;
    const ScalarField edens_t =
        dealias(d.rho_t * spec_en + s.rho * (udot + *d.e_t));
    return edens_t + divergence(dealias((edens + P) * s.u));
  }
  case SystemKind::mhd: {
    const ScalarField spec_en = 0.5 * mag2 + *s.e;
    const ScalarField magB2 = magnitude_squared(*s.B);
    const ScalarField edens = s.rho * spec_en + 0.5 * magB2;
    const ScalarField edens_t = dealias(
        d.rho_t * spec_en + s.rho * (udot + *d.e_t) + dot(*s.B, *d.B_t));
    const VectorField flux =
        dealias((edens + P + 0.5 * magB2) * s.u +
                (-1.0) * (dot(s.u, *s.B) * (*s.B)));
    return edens_t + divergence(flux);
  }
  }
  throw std::invalid_argument("energy_budget_residual: unknown system kind");
}

BudgetReport make_report(const SystemState& s, const Tendency& d,
                         double q0_maxnorm, double E0_initial) {
  BudgetReport r;
  r.kind = s.kind;
  r.t = s.t;

  const ScalarField h = helicity_density(s);
  r.H = volume_integral(h);

  const Energies en = energies(s);
  r.E0 = en.E0;
  r.E = en.E;
  r.E0B = en.E0B;

  const ScalarField q = potential_vorticity(s);
  r.q_maxnorm = max_norm(q);

  r.dHdt_source = dhdt_source(s);
  r.dHdt_direct = dhdt_direct(s, d);

  const ScalarField res = budget_residual(s, d);
  r.residual_maxnorm = max_norm(res);
  r.residual_l2 = l2_norm(res);

  r.divu_l1 = l1_norm(divergence(s.u));
  r.mass = volume_integral(s.rho);

  switch (s.kind) {
  case SystemKind::ii_euler:
    r.bound_rhs = 2.0 * q0_maxnorm * E0_initial;
    break;
  case SystemKind::comp_euler:
    r.bound_rhs = 2.0 * r.q_maxnorm * r.E0 + 2.0 * max_norm(h) * r.divu_l1;
    break;
  default:
    r.bound_rhs = nan_cell;
    break;
  }
  return r;
}

GrowthBound growth_bound_check(const BudgetReport& r) {
  GrowthBound out;
  out.applicable =
      r.kind == SystemKind::ii_euler || r.kind == SystemKind::comp_euler;
  if (!out.applicable) {
    out.bound = nan_cell;
    out.margin = nan_cell;
    return out;
  }
  out.bound = r.bound_rhs;
  out.margin = out.bound - std::abs(r.dHdt_source);
  out.pass = out.margin >= -1e-8 * out.bound;
  return out;
}

LambdaReport lambda_h(const std::vector<BudgetReport>& series, double window_T,
                      double L) {
  if (series.size() < 3)
    throw std::invalid_argument("lambda_h: need at least 3 reports");

  LambdaReport out;
  const double t0 = series.front().t;
  const double span = series.back().t - t0;
  const double W = window_T > 0.0 ? std::min(window_T, span) : span;
  const double t_hi = t0 + W * (1.0 + 1e-12);

  double integral = 0.0;
  double t_last = t0;
  for (std::size_t i = 1; i < series.size(); ++i) {
    if (series[i].t > t_hi)
      break;
    integral += 0.5 *
                (std::abs(series[i - 1].dHdt_source) +
                 std::abs(series[i].dHdt_source)) *
                (series[i].t - series[i - 1].t);
    t_last = series[i].t;
  }
  out.T = t_last - t0;
  out.mean_abs_dHdt = out.T > 0.0 ? integral / out.T : 0.0;

  const double E0 = series.front().E0;
  out.varrho0 = series.front().mass / (L * L * L);
  const double q0 = series.front().q_maxnorm;
  const double denom = std::sqrt(out.varrho0) * std::pow(E0, 1.5);

  // A mean below the rounding noise of its own definition is treated as an
  // exact zero; the 2/7 power would otherwise inflate machine dust.
  if (denom > 0.0 && out.mean_abs_dHdt > 1e-12 * denom)
    out.lambda_inv = std::pow(out.mean_abs_dHdt / denom, 2.0 / 7.0);
  else
    out.lambda_inv = 0.0;

  out.bound_applicable = series.front().kind == SystemKind::ii_euler;
  if (E0 > 0.0 && out.varrho0 > 0.0)
    out.lambda_inv_bound = std::pow(4.0 / (E0 * out.varrho0), 1.0 / 7.0) *
                           std::pow(q0, 2.0 / 7.0);
  else
    out.lambda_inv_bound = q0 == 0.0 ? 0.0 : nan_cell;

  if (out.bound_applicable)
    out.pass = out.lambda_inv <= out.lambda_inv_bound * (1.0 + 1e-8) ||
               out.lambda_inv == 0.0;
  return out;
}

} // namespace helibox
