// Release gate: seven numbered checks, one PASS/FAIL line each, exit 0 only
// when every check passes. Tolerances are fixed here, in code, so a run is
// comparable across machines and dates.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "helibox/config.hpp"
#include "helibox/diagnostics.hpp"
#include "helibox/identities.hpp"
#include "helibox/initial_conditions.hpp"
#include "helibox/operators.hpp"
#include "helibox/rhs.hpp"
#include "helibox/runner.hpp"
#include "helibox/stepper.hpp"
#include "helibox/timeseries.hpp"
#include "helibox/trig_poly.hpp"

using namespace helibox;

namespace {

int g_failures = 0;

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

void report(int id, const char* name, bool pass, double elapsed,
            const std::string& detail) {
  if (!pass)
    ++g_failures;
  std::printf("[%s] %d %-28s %s  (%.1f s)\n", pass ? "PASS" : "FAIL", id,
              name, detail.c_str(), elapsed);
  std::fflush(stdout);
}

Eos polytropic(double gamma, double K = 1.0) {
  Eos e;
  e.kind = EosKind::polytropic;
  e.gamma = gamma;
  e.K = K;
  return e;
}

Eos ideal_gas(double gamma) {
  Eos e;
  e.kind = EosKind::ideal_gas;
  e.gamma = gamma;
  return e;
}

std::string fmt(const char* pattern, double a, double b = 0.0,
                double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c);
  return buf;
}

// ---------------------------------------------------------------- check 1
// Analytic identity suite: every catalogued identity on >= 10 manufactured
// field sets at n in {32, 64}, max-norm residual <= 1e-11 * term scale,
// within one minute.
void check_identities() {
  Timer t;
  const auto rows = verify_all_identities(10);
  bool pass = true;
  double worst = 0.0;
  for (const IdentityResult& r : rows) {
    pass = pass && r.pass;
    if (r.scale > 0.0)
      worst = std::max(worst, r.residual / (1e-11 * r.scale));
  }
  const double elapsed = t.seconds();
  pass = pass && elapsed <= 60.0;
  char head[64];
  std::snprintf(head, sizeof(head), "%zu checks, ", rows.size());
  report(1, "identity-suite", pass, elapsed,
         head + fmt("worst residual/tol %.2e", worst));
}

// ---------------------------------------------------------------- check 2
// Helicity conservation for the barotropic system (rho = 1 + 0.2 sin x,
// abc velocity, K = 1, gamma = 2, n = 32, t in [0, 0.5]): relative drift of
// H <= 1e-6 at CFL 0.25, shrinking at least 8x when dt is halved. Two
// minutes of wall clock allowed.
double baro_drift(double cfl) {
  RunConfig cfg;
  cfg.system = SystemKind::baro_euler;
  cfg.n = 32;
  cfg.t_end = 0.5;
  cfg.cfl = cfl;
  cfg.eos = polytropic(2.0);
  cfg.ic.rho_eps = 0.2;
  cfg.ic.rho_axis = 'x';
  const RunResult r = run_simulation(cfg);
  const double H0 = r.series.reports.front().H;
  double drift = 0.0;
  for (const BudgetReport& row : r.series.reports)
    drift = std::max(drift, std::abs(row.H - H0));
  return drift / std::abs(H0);
}

void check_baro_conservation() {
  Timer t;
  const double drift_full = baro_drift(0.25);
  const double drift_half = baro_drift(0.125);
  const double ratio = drift_full / std::max(drift_half, 1e-300);
  const double elapsed = t.seconds();
  const bool pass =
      drift_full <= 1e-6 && ratio >= 8.0 && elapsed <= 120.0;
  report(2, "baro-helicity-conservation", pass, elapsed,
         fmt("drift %.2e, dt-halving ratio %.1f", drift_full, ratio));
}

// ---------------------------------------------------------------- check 3
// Variable-density incompressible run (rho = 1 + 0.3 sin z, abc velocity,
// n = 32, t in [0, 0.5]): (a) max-norm of q never grows past 1e-4 relative;
// (b) the integrated source and the directly composed dH/dt agree to
// 1e-6 * (2 ||q0|| E0) at every output step; (c) the growth-bound margin
// stays non-negative; (d) the inverse length scale respects its cap to
// 1e-8 relative. Five minutes allowed.
void check_ii_budget() {
  Timer t;
  RunConfig cfg;
  cfg.system = SystemKind::ii_euler;
  cfg.n = 32;
  cfg.t_end = 0.5;
  cfg.cfl = 0.25;
  cfg.ic.rho_eps = 0.3;
  cfg.ic.rho_axis = 'z';
  const RunResult r = run_simulation(cfg);

  const double q0 = r.series.reports.front().q_maxnorm;
  const double E0 = r.series.reports.front().E0;
  double q_growth = 0.0;
  double worst_gap = 0.0;
  double min_margin = 1e300;
  for (const BudgetReport& row : r.series.reports) {
    q_growth = std::max(q_growth, row.q_maxnorm / q0 - 1.0);
    worst_gap =
        std::max(worst_gap, std::abs(row.dHdt_source - row.dHdt_direct));
    min_margin = std::min(min_margin, row.bound_rhs -
                                          std::abs(row.dHdt_source));
  }
  const LambdaReport lr = lambda_h(r.series.reports, 0.0, cfg.L);
  const bool pass_a = q_growth <= 1e-4;
  const bool pass_b = worst_gap <= 1e-6 * (2.0 * q0 * E0);
  const bool pass_c = min_margin >= 0.0;
  const bool pass_d =
      lr.lambda_inv <= lr.lambda_inv_bound * (1.0 + 1e-8);
  const double elapsed = t.seconds();
  const bool pass = pass_a && pass_b && pass_c && pass_d && elapsed <= 300.0;
  report(3, "ii-ertel-and-bound", pass, elapsed,
         fmt("q growth %.1e, rate gap %.1e, margin %.3g", q_growth,
             worst_gap, min_margin) +
             fmt(", lambda_inv/cap %.3f", lr.lambda_inv / lr.lambda_inv_bound));
}

// ---------------------------------------------------------------- check 4
// Residual convergence: for each system on canonical initial data, the
// max-norms of the helicity budget residual, the potential-vorticity
// residual, and the energy residual all drop by at least 100x from n = 32
// to n = 64. Five minutes allowed.
//
// The canonical fields are fixed multi-harmonic recipes. Mixed-axis density
// terms and the stacked x-modes in u (sin 6x next to sin 5x) make every
// residual genuinely truncation-limited at n = 32: products reach |m| = 11,
// past the n = 32 band edge but comfortably inside the n = 64 one.
TrigPoly canonical_rho() {
  return TrigPoly::constant(1.0) +
         TrigPoly::term(0.20, TrigFn::one, 0, TrigFn::one, 0, TrigFn::sin, 1) +
         TrigPoly::term(0.10, TrigFn::cos, 2, TrigFn::one, 0, TrigFn::one, 0) +
         TrigPoly::term(0.06, TrigFn::one, 0, TrigFn::sin, 2, TrigFn::one, 0) +
         TrigPoly::term(0.05, TrigFn::sin, 2, TrigFn::one, 0, TrigFn::cos, 1) +
         TrigPoly::term(0.05, TrigFn::cos, 1, TrigFn::sin, 2, TrigFn::one, 0);
}

TrigVec canonical_u() {
  TrigVec u;
  u.x = TrigPoly::term(1.0, TrigFn::one, 0, TrigFn::one, 0, TrigFn::sin, 1) +
        TrigPoly::term(1.0, TrigFn::one, 0, TrigFn::cos, 1, TrigFn::one, 0) +
        TrigPoly::term(0.3, TrigFn::one, 0, TrigFn::one, 0, TrigFn::sin, 2) +
        TrigPoly::term(0.3, TrigFn::one, 0, TrigFn::cos, 2, TrigFn::one, 0) +
        TrigPoly::term(0.12, TrigFn::sin, 6, TrigFn::one, 0, TrigFn::one, 0);
  u.y = TrigPoly::term(1.0, TrigFn::sin, 1, TrigFn::one, 0, TrigFn::one, 0) +
        TrigPoly::term(1.0, TrigFn::one, 0, TrigFn::one, 0, TrigFn::cos, 1) +
        TrigPoly::term(0.3, TrigFn::sin, 2, TrigFn::one, 0, TrigFn::one, 0) +
        TrigPoly::term(0.3, TrigFn::one, 0, TrigFn::one, 0, TrigFn::cos, 2) +
        TrigPoly::term(0.12, TrigFn::sin, 5, TrigFn::one, 0, TrigFn::one, 0);
  u.z = TrigPoly::term(1.0, TrigFn::one, 0, TrigFn::sin, 1, TrigFn::one, 0) +
        TrigPoly::term(1.0, TrigFn::cos, 1, TrigFn::one, 0, TrigFn::one, 0) +
        TrigPoly::term(0.3, TrigFn::one, 0, TrigFn::sin, 2, TrigFn::one, 0) +
        TrigPoly::term(0.3, TrigFn::cos, 2, TrigFn::one, 0, TrigFn::one, 0) +
        TrigPoly::term(0.12, TrigFn::one, 0, TrigFn::sin, 3, TrigFn::one, 0);
  return u;
}

TrigPoly canonical_e() {
  return TrigPoly::constant(1.0) +
         TrigPoly::term(0.2, TrigFn::one, 0, TrigFn::sin, 1, TrigFn::one, 0) +
         TrigPoly::term(0.1, TrigFn::one, 0, TrigFn::one, 0, TrigFn::cos, 2);
}

TrigVec canonical_B() {
  TrigVec b;
  b.x = TrigPoly::term(0.4, TrigFn::one, 0, TrigFn::one, 0, TrigFn::sin, 1) +
        TrigPoly::term(0.4, TrigFn::one, 0, TrigFn::cos, 1, TrigFn::one, 0) +
        TrigPoly::term(0.2, TrigFn::one, 0, TrigFn::one, 0, TrigFn::sin, 5);
  b.y = TrigPoly::term(0.4, TrigFn::sin, 1, TrigFn::one, 0, TrigFn::one, 0) +
        TrigPoly::term(0.4, TrigFn::one, 0, TrigFn::one, 0, TrigFn::cos, 1) +
        TrigPoly::term(0.2, TrigFn::sin, 5, TrigFn::one, 0, TrigFn::one, 0);
  b.z = TrigPoly::term(0.4, TrigFn::one, 0, TrigFn::sin, 1, TrigFn::one, 0) +
        TrigPoly::term(0.4, TrigFn::cos, 1, TrigFn::one, 0, TrigFn::one, 0) +
        TrigPoly::term(0.2, TrigFn::one, 0, TrigFn::sin, 5, TrigFn::one, 0);
  return b;
}

SystemState canonical_state(SystemKind kind, int n) {
  const GridPtr g = make_grid(n);
  SystemState s;
  s.kind = kind;
  s.t = 0.0;
  s.rho = canonical_rho().sample(g);
  s.u = canonical_u().sample(g);
  s.pressure_tol = 1e-12;
  switch (kind) {
  case SystemKind::baro_euler:
    s.eos = polytropic(5.0 / 3.0);
    break;
  case SystemKind::ii_euler:
    s.u = project_solenoidal(s.u);
    break;
  case SystemKind::comp_euler:
    s.eos = ideal_gas(5.0 / 3.0);
    s.e = canonical_e().sample(g);
    break;
  case SystemKind::mhd:
    s.eos = ideal_gas(5.0 / 3.0);
    s.e = canonical_e().sample(g);
    s.B = canonical_B().sample(g);
    break;
  }
  return s;
}

struct ResidualTriple {
  double budget, pv, energy;
};

ResidualTriple residuals_at(SystemKind kind, int n) {
  SystemState s = canonical_state(kind, n);
  const Tendency d = compute_rhs(s);
  return {max_norm(budget_residual(s, d)),
          max_norm(pv_budget_residual(s, d)),
          max_norm(energy_budget_residual(s, d))};
}

void check_residual_convergence() {
  Timer t;
  bool pass = true;
  std::string parts;
  for (SystemKind kind : {SystemKind::baro_euler, SystemKind::ii_euler,
                          SystemKind::comp_euler, SystemKind::mhd}) {
    const ResidualTriple coarse = residuals_at(kind, 32);
    const ResidualTriple fine = residuals_at(kind, 64);
    const double rb = coarse.budget / fine.budget;
    const double rp = coarse.pv / fine.pv;
    const double re = coarse.energy / fine.energy;
    pass = pass && rb >= 100.0 && rp >= 100.0 && re >= 100.0;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s %.0e/%.0e/%.0e ",
                  to_string(kind).c_str(), rb, rp, re);
    parts += buf;
  }
  const double elapsed = t.seconds();
  pass = pass && elapsed <= 300.0;
  report(4, "residual-convergence", pass, elapsed, "ratios " + parts);
}

// ---------------------------------------------------------------- check 5
// Energy conservation at n = 32 over t in [0, 0.3]: the acoustic ideal-gas
// run conserves E to 1e-6 relative and the Orszag-Tang run conserves E0B to
// 1e-6 relative with ||div B|| <= 1e-10 ||grad B|| at every step.
void check_energy_conservation() {
  Timer t;

  RunConfig comp;
  comp.system = SystemKind::comp_euler;
  comp.n = 32;
  comp.t_end = 0.3;
  comp.cfl = 0.25;
  comp.eos = ideal_gas(1.4);
  comp.ic.name = "acoustic";
  comp.ic.amp = 1e-3;
  const RunResult rc = run_simulation(comp);
  double comp_drift = 0.0;
  const double E_first = rc.series.reports.front().E;
  for (const BudgetReport& row : rc.series.reports)
    comp_drift = std::max(comp_drift,
                          std::abs(row.E - E_first) / std::abs(E_first));

  // The magnetic run steps manually so div B can be checked every step.
  const GridPtr g = make_grid(32);
  IcParams ot;
  ot.name = "orszag-tang";
  ot.A = 0.5;
  ot.b0 = 0.5;
  SystemState s = make_initial_state(SystemKind::mhd, g,
                                     ideal_gas(5.0 / 3.0), ot);
  const double E0B_first = energies(s).E0B;
  double mhd_drift = 0.0;
  double worst_divb = 0.0;
  while (s.t < 0.3 - 1e-12) {
    double dt = cfl_dt(s, 0.25, 0.1);
    if (s.t + dt > 0.3)
      dt = 0.3 - s.t;
    s = rk4_step(s, dt, compute_rhs);
    mhd_drift = std::max(mhd_drift, std::abs(energies(s).E0B - E0B_first) /
                                        std::abs(E0B_first));
    worst_divb =
        std::max(worst_divb, max_norm(divergence(*s.B)) /
                                 gradient_max_norm(*s.B));
  }
  const double elapsed = t.seconds();
  const bool pass = comp_drift <= 1e-6 && mhd_drift <= 1e-6 &&
                    worst_divb <= 1e-10;
  report(5, "energy-conservation", pass, elapsed,
         fmt("E drift %.1e, E0B drift %.1e, divB/gradB %.1e", comp_drift,
             mhd_drift, worst_divb));
}

// ---------------------------------------------------------------- check 6
// Consistency reductions: (a) the magnetic system with B = 0 reproduces the
// compressible trajectory to 1e-12 relative over 10 steps; (b) the
// variable-density incompressible system at rho = 1 keeps helicity to 1e-8
// relative over t in [0, 0.2].
void check_reductions() {
  Timer t;

  const GridPtr g = make_grid(32);
  IcParams ic;
  ic.rho_eps = 0.3;
  ic.comp_amp = 0.2;
  ic.e_eps = 0.2;
  SystemState comp = make_initial_state(SystemKind::comp_euler, g,
                                        ideal_gas(5.0 / 3.0), ic);
  SystemState mhd = make_initial_state(SystemKind::comp_euler, g,
                                       ideal_gas(5.0 / 3.0), ic);
  mhd.kind = SystemKind::mhd;
  mhd.B = VectorField(g, Space::physical); // exact zeros

  double worst_rel = 0.0;
  double dt_gap = 0.0;
  for (int step = 0; step < 10; ++step) {
    const double dtc = cfl_dt(comp, 0.25, 0.1);
    const double dtm = cfl_dt(mhd, 0.25, 0.1);
    dt_gap = std::max(dt_gap, std::abs(dtc - dtm));
    comp = rk4_step(comp, dtc, compute_rhs);
    mhd = rk4_step(mhd, dtc, compute_rhs);
    auto rel = [](const ScalarField& a, const ScalarField& b) {
      return max_norm(a - b) / std::max(max_norm(b), 1e-300);
    };
    worst_rel = std::max({worst_rel, rel(mhd.rho, comp.rho),
                          rel(mhd.u.x, comp.u.x), rel(mhd.u.y, comp.u.y),
                          rel(mhd.u.z, comp.u.z), rel(*mhd.e, *comp.e)});
  }
  const bool pass_a = worst_rel <= 1e-12 && dt_gap == 0.0;

  RunConfig ii;
  ii.system = SystemKind::ii_euler;
  ii.n = 32;
  ii.t_end = 0.2;
  ii.cfl = 0.25;
  ii.ic.rho_eps = 0.0;
  const RunResult r = run_simulation(ii);
  const double H0 = r.series.reports.front().H;
  double drift = 0.0;
  for (const BudgetReport& row : r.series.reports)
    drift = std::max(drift, std::abs(row.H - H0) / std::abs(H0));
  const bool pass_b = drift <= 1e-8;

  const double elapsed = t.seconds();
  report(6, "consistency-reductions", pass_a && pass_b, elapsed,
         fmt("B=0 mismatch %.1e, uniform-density H drift %.1e", worst_rel,
             drift));
}

// ---------------------------------------------------------------- check 7
// Determinism: one config, three executions (twice at one thread count,
// once at another) must print byte-identical CSV series.
std::string reference_series(int threads) {
#ifdef _OPENMP
  omp_set_num_threads(threads);
#else
  (void)threads;
#endif
  RunConfig cfg;
  cfg.system = SystemKind::ii_euler;
  cfg.n = 32;
  cfg.t_end = 0.1;
  cfg.cfl = 0.25;
  cfg.ic.rho_eps = 0.3;
  std::ostringstream out;
  write_timeseries_header(out, cfg.system, cfg.n, cfg.L);
  run_simulation(cfg, [&](const BudgetReport& row) {
    write_timeseries_row(out, row);
  });
  return out.str();
}

void check_determinism() {
  Timer t;
  const std::string a = reference_series(2);
  const std::string b = reference_series(4);
  const std::string c = reference_series(2);
  const bool pass = a == b && a == c && !a.empty();
  char buf[96];
  std::snprintf(buf, sizeof(buf),
                "%zu-byte series %s across reruns and thread counts",
                a.size(), pass ? "byte-identical" : "MISMATCHED");
  report(7, "determinism", pass, t.seconds(), buf);
}

} // namespace

int main() {
  std::printf("release gate: 7 checks\n");
  check_identities();
  check_baro_conservation();
  check_ii_budget();
  check_residual_convergence();
  check_energy_conservation();
  check_reductions();
  check_determinism();
  if (g_failures == 0)
    std::printf("all checks passed\n");
  else
    std::printf("%d check(s) FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
