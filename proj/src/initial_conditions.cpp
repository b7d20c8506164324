#include "helibox/initial_conditions.hpp"

#include <cmath>

#include "helibox/errors.hpp"
#include "helibox/operators.hpp"

namespace helibox {

namespace {

int axis_index(char c) {
  switch (c) {
  case 'x': return 0;
  case 'y': return 1;
  case 'z': return 2;
  default:
    throw ConfigError("rho_axis must be one of x, y, z");
  }
}

void validate_common(const IcParams& ic) {
  if (ic.rho0 <= 0.0)
    throw ConfigError("rho0 must be positive");
  if (std::abs(ic.rho_eps) >= 1.0)
    throw ConfigError("|rho_eps| must be < 1 to keep the density positive");
  axis_index(ic.rho_axis);
}

ScalarField modulated_density(const GridPtr& g, const IcParams& ic) {
  const double k0 = two_pi / g->box_length();
  const int ax = axis_index(ic.rho_axis);
  return sample_field(g, [&](double x, double y, double z) {
    const double c = ax == 0 ? x : (ax == 1 ? y : z);
    return ic.rho0 * (1.0 + ic.rho_eps * std::sin(k0 * c));
  });
}

ScalarField modulated_energy(const GridPtr& g, const IcParams& ic) {
  if (ic.e0 <= 0.0)
    throw ConfigError("e0 must be positive");
  if (std::abs(ic.e_eps) >= 1.0)
    throw ConfigError("|e_eps| must be < 1 to keep the internal energy positive");
  const double k0 = two_pi / g->box_length();
  return sample_field(g, [&](double, double y, double) {
    return ic.e0 * (1.0 + ic.e_eps * std::sin(k0 * y));
  });
}

VectorField abc_velocity(const GridPtr& g, const IcParams& ic) {
  const double k0 = two_pi / g->box_length();
  const double A = ic.A, B = ic.B, C = ic.C, m = ic.comp_amp;
  return sample_vector(
      g,
      [=](double x, double y, double z) {
        return A * std::sin(k0 * z) + C * std::cos(k0 * y) + m * std::sin(k0 * x);
      },
      [=](double x, double y, double z) {
        return B * std::sin(k0 * x) + A * std::cos(k0 * z) + m * std::sin(k0 * y);
      },
      [=](double x, double y, double z) {
        return C * std::sin(k0 * y) + B * std::cos(k0 * x) + m * std::sin(k0 * z);
      });
}

VectorField taylor_green_velocity(const GridPtr& g, const IcParams& ic) {
  const double k0 = two_pi / g->box_length();
  const double A = ic.A;
  return sample_vector(
      g,
      [=](double x, double y, double z) {
        return A * std::sin(k0 * x) * std::cos(k0 * y) * std::cos(k0 * z);
      },
      [=](double x, double y, double z) {
        return -A * std::cos(k0 * x) * std::sin(k0 * y) * std::cos(k0 * z);
      },
      [=](double, double, double) { return 0.0; });
}

VectorField orszag_tang_velocity(const GridPtr& g, const IcParams& ic) {
  const double k0 = two_pi / g->box_length();
  const double a = ic.A;
  const double d = ic.ot_delta;
  return sample_vector(
      g, [=](double, double y, double) { return -a * std::sin(k0 * y); },
      [=](double x, double, double) { return a * std::sin(k0 * x); },
      [=](double, double, double z) { return a * d * std::sin(k0 * z); });
}

VectorField orszag_tang_field(const GridPtr& g, const IcParams& ic) {
  const double k0 = two_pi / g->box_length();
  const double b0 = ic.b0;
  return sample_vector(
      g, [=](double, double y, double) { return -b0 * std::sin(k0 * y); },
      [=](double x, double, double) { return b0 * std::sin(2.0 * k0 * x); },
      [=](double x, double, double) { return b0 * std::cos(k0 * x); });
}

// Solenoidal field sharing the abc pattern; used as the magnetic seed.
VectorField abc_field(const GridPtr& g, const IcParams& ic) {
  const double k0 = two_pi / g->box_length();
  const double A = ic.A, B = ic.B, C = ic.C, b0 = ic.b0;
  return sample_vector(
      g,
      [=](double, double y, double z) {
        return b0 * (A * std::sin(k0 * z) + C * std::cos(k0 * y));
      },
      [=](double x, double, double z) {
        return b0 * (B * std::sin(k0 * x) + A * std::cos(k0 * z));
      },
      [=](double x, double y, double) {
        return b0 * (C * std::sin(k0 * y) + B * std::cos(k0 * x));
      });
}

bool needs_energy(SystemKind kind) {
  return kind == SystemKind::comp_euler || kind == SystemKind::mhd;
}

SystemState acoustic_state(SystemKind kind, const GridPtr& g, const Eos& eos,
                           const IcParams& ic, double rho_floor) {
  if (kind == SystemKind::ii_euler || kind == SystemKind::mhd)
    throw ConfigError("acoustic IC needs a compressible hydrodynamic system");
  if (std::abs(ic.amp) * eos.gamma >= 1.0)
    throw ConfigError("acoustic amp too large: gamma*|amp| must be < 1");

  const double k0 = two_pi / g->box_length();
  const double g0 = eos.gamma;
  // Background pressure and sound speed for either equation of state.
  const double P0 = eos.kind == EosKind::polytropic
                        ? eos.K * std::pow(ic.rho0, g0)
                        : (g0 - 1.0) * ic.rho0 * ic.e0;
  const double c0 = std::sqrt(g0 * P0 / ic.rho0);
  const double a = ic.amp;

  SystemState st;
  st.kind = kind;
  st.t = 0.0;
  st.eos = eos;
  st.rho_floor = rho_floor;
  st.rho = sample_field(g, [=](double x, double, double) {
    return ic.rho0 * (1.0 + a * std::cos(k0 * x));
  });
  st.u = sample_vector(
      g, [=](double x, double, double) { return c0 * a * std::cos(k0 * x); },
      [](double, double, double) { return 0.0; },
      [](double, double, double) { return 0.0; });
  if (needs_energy(kind)) {
    // e chosen so that P = P0 (1 + gamma a cos) to linear order in a.
    st.e = sample_field(g, [=](double x, double, double) {
      const double P = P0 * (1.0 + g0 * a * std::cos(k0 * x));
      const double rho = ic.rho0 * (1.0 + a * std::cos(k0 * x));
      return P / ((g0 - 1.0) * rho);
    });
  }
  return st;
}

} // namespace

SystemState make_initial_state(SystemKind kind, const GridPtr& grid,
                               const Eos& eos, const IcParams& ic,
                               double rho_floor) {
  eos.validate();
  validate_common(ic);

  if (ic.name == "acoustic") {
    SystemState st = acoustic_state(kind, grid, eos, ic, rho_floor);
    check_floors(st, "initial state");
    return st;
  }

  SystemState st;
  st.kind = kind;
  st.t = 0.0;
  st.eos = eos;
  st.rho_floor = rho_floor;
  st.rho = modulated_density(grid, ic);

  if (ic.name == "abc") {
    st.u = abc_velocity(grid, ic);
  } else if (ic.name == "taylor-green") {
    if (kind == SystemKind::mhd)
      throw ConfigError("taylor-green IC has no magnetic component");
    st.u = taylor_green_velocity(grid, ic);
  } else if (ic.name == "orszag-tang") {
    if (kind != SystemKind::mhd)
      throw ConfigError("orszag-tang IC requires the mhd system");
    st.u = orszag_tang_velocity(grid, ic);
  } else {
    throw ConfigError("unknown initial condition: " + ic.name);
  }

  if (kind == SystemKind::ii_euler) {
    if (ic.comp_amp != 0.0)
      throw ConfigError("comp_amp must be 0 for ii-euler (solenoidal velocity)");
    // Clean any sampling round-off so div u = 0 holds spectrally.
    st.u = project_solenoidal(st.u);
  }

  if (needs_energy(kind))
    st.e = modulated_energy(grid, ic);

  if (kind == SystemKind::mhd)
    st.B = ic.name == "orszag-tang" ? orszag_tang_field(grid, ic)
                                    : abc_field(grid, ic);

  check_floors(st, "initial state");
  return st;
}

} // namespace helibox
