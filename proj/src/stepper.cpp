#include "helibox/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "helibox/errors.hpp"
#include "helibox/operators.hpp"

namespace helibox {

SystemState rk4_step(const SystemState& s, double dt, const RhsFn& rhs,
                     const Tendency* k1) {
  if (!(dt > 0.0))
    throw std::invalid_argument("rk4_step: dt must be positive");

  const Tendency k1_local = k1 ? Tendency{} : rhs(s);
  const Tendency& t1 = k1 ? *k1 : k1_local;

  SystemState s2 = add_scaled(s, t1, 0.5 * dt, 0.5 * dt);
  check_floors(s2, "rk4 stage 2");
  const Tendency t2 = rhs(s2);

  SystemState s3 = add_scaled(s, t2, 0.5 * dt, 0.5 * dt);
  check_floors(s3, "rk4 stage 3");
  const Tendency t3 = rhs(s3);

  SystemState s4 = add_scaled(s, t3, dt, dt);
  check_floors(s4, "rk4 stage 4");
  const Tendency t4 = rhs(s4);

  SystemState out = add_scaled(s, t1, dt / 6.0, dt);
  out = add_scaled(out, t2, dt / 3.0, 0.0);
  out = add_scaled(out, t3, dt / 3.0, 0.0);
  out = add_scaled(out, t4, dt / 6.0, 0.0);

  if (out.kind == SystemKind::ii_euler)
    out.u = project_solenoidal(out.u);

  check_floors(out, "rk4 result");
  return out;
}

double cfl_dt(const SystemState& s, double cfl, double dt_max) {
  if (!(cfl > 0.0) || cfl > 1.0)
    throw std::invalid_argument("cfl_dt: cfl must lie in (0, 1]");
  if (!(dt_max > 0.0))
    throw std::invalid_argument("cfl_dt: dt_max must be positive");

  const Grid& g = s.grid();
  const std::size_t size = g.size();
  const double* ux = s.u.x.phys();
  const double* uy = s.u.y.phys();
  const double* uz = s.u.z.phys();
  const double* rho = s.rho.phys();
  const double* e = s.e ? s.e->phys() : nullptr;
  const double* bx = s.B ? s.B->x.phys() : nullptr;
  const double* by = s.B ? s.B->y.phys() : nullptr;
  const double* bz = s.B ? s.B->z.phys() : nullptr;
  const double gam = s.eos.gamma;
  const double K = s.eos.K;
  const bool polytropic = s.eos.kind == EosKind::polytropic;
  const bool has_sound = s.kind != SystemKind::ii_euler;

  double vmax = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    double speed =
        std::sqrt(ux[i] * ux[i] + uy[i] * uy[i] + uz[i] * uz[i]);
    if (has_sound) {
      const double c2 = polytropic ? gam * K * std::pow(rho[i], gam - 1.0)
                                   : gam * (gam - 1.0) * e[i];
      speed += std::sqrt(c2);
    }
    if (bx) {
      const double b2 = bx[i] * bx[i] + by[i] * by[i] + bz[i] * bz[i];
      speed += std::sqrt(b2 / rho[i]);
    }
    vmax = std::max(vmax, speed);
  }
  if (vmax == 0.0)
    return dt_max;
  return std::min(cfl * g.dx() / vmax, dt_max);
}

} // namespace helibox
