#include "helibox/state.hpp"

#include <sstream>

#include "helibox/errors.hpp"

namespace helibox {

std::string to_string(SystemKind k) {
  switch (k) {
    case SystemKind::baro_euler: return "baro-euler";
    case SystemKind::ii_euler: return "ii-euler";
    case SystemKind::comp_euler: return "comp-euler";
    case SystemKind::mhd: return "mhd";
  }
  return "?";
}

SystemKind system_from_string(const std::string& name) {
  if (name == "baro-euler" || name == "baro") return SystemKind::baro_euler;
  if (name == "ii-euler" || name == "ii") return SystemKind::ii_euler;
  if (name == "comp-euler" || name == "comp") return SystemKind::comp_euler;
  if (name == "mhd") return SystemKind::mhd;
  throw ConfigError("unknown system '" + name +
                    "' (expected baro-euler, ii-euler, comp-euler, or mhd)");
}

namespace {
void check_min(const ScalarField& f, double floor, const char* name,
               const std::string& where) {
  const Grid& g = f.grid();
  const double* p = f.phys();
  const int n = g.n();
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy)
      for (int ix = 0; ix < n; ++ix) {
        const double v = p[g.phys_index(ix, iy, iz)];
        if (v < floor) {
          std::ostringstream msg;
          msg << where << ": " << name << " = " << v << " below floor " << floor
              << " at cell (" << ix << ", " << iy << ", " << iz << ")";
          throw FloorError(msg.str());
        }
      }
}
} // namespace

void check_floors(const SystemState& state, const std::string& where) {
  check_min(state.rho, state.rho_floor, "rho", where);
  if (state.e) check_min(*state.e, 0.0, "e", where);
}

SystemState add_scaled(const SystemState& state, const Tendency& tend, double c,
                       double dt_shift) {
  SystemState out = state;
  out.t = state.t + dt_shift;
  axpy(out.rho, c, tend.rho_t);
  axpy(out.u, c, tend.u_t);
  if (out.e) axpy(*out.e, c, *tend.e_t);
  if (out.B) axpy(*out.B, c, *tend.B_t);
  return out;
}

} // namespace helibox
