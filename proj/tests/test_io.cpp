#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <limits>
#include <sstream>
#include <string>

#include "helibox/config.hpp"
#include "helibox/errors.hpp"
#include "helibox/initial_conditions.hpp"
#include "helibox/runner.hpp"
#include "helibox/snapshot.hpp"
#include "helibox/timeseries.hpp"

using namespace helibox;

namespace {

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in, "test.ini");
}

std::string tmp_path(const std::string& leaf) {
  return (std::filesystem::temp_directory_path() / leaf).string();
}

bool bit_equal(const ScalarField& a, const ScalarField& b) {
  return std::memcmp(a.phys(), b.phys(),
                     sizeof(double) * a.grid().size()) == 0;
}

} // namespace

TEST_CASE("minimal config fills documented defaults") {
  const RunConfig cfg = parse("[run]\nsystem = ii\nn = 32\n");
  CHECK(cfg.system == SystemKind::ii_euler);
  CHECK(cfg.n == 32);
  CHECK(cfg.L == doctest::Approx(two_pi).epsilon(1e-15));
  CHECK(cfg.cfl == 0.25);
  CHECK(cfg.t_end == 0.5);
  CHECK(cfg.output_stride == 1);
  CHECK(cfg.pressure_tol == 1e-10);
  CHECK(cfg.pressure_max_iter == 500);
  CHECK(cfg.rho_floor == 1e-6);
}

TEST_CASE("config rejections carry the offending line") {
  SUBCASE("unknown key") {
    try {
      parse("[run]\nsystem = ii\nviscosity = 1\n");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("test.ini:3") != std::string::npos);
      CHECK(std::string(e.what()).find("viscosity") != std::string::npos);
    }
  }
  SUBCASE("unknown section") {
    CHECK_THROWS_AS(parse("[physics]\nx = 1\n"), ConfigError);
  }
  SUBCASE("key before any section") {
    CHECK_THROWS_AS(parse("n = 32\n"), ConfigError);
  }
  SUBCASE("missing equals") {
    CHECK_THROWS_AS(parse("[run]\nsystem ii\n"), ConfigError);
  }
  SUBCASE("empty value") {
    CHECK_THROWS_AS(parse("[run]\nn =\n"), ConfigError);
  }
  SUBCASE("trailing characters") {
    CHECK_THROWS_AS(parse("[run]\nn = 32x\n"), ConfigError);
  }
  SUBCASE("bad axis") {
    CHECK_THROWS_AS(parse("[run]\nsystem = ii\n[ic]\nrho_axis = w\n"),
                    ConfigError);
  }
}

TEST_CASE("config range and coupling validation") {
  CHECK_THROWS_AS(parse("[run]\nsystem = baro\n[eos]\ngamma = 0.9\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse("[run]\nn = 7\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\ncfl = 1.5\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\ncfl = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\noutput_stride = 0\n"), ConfigError);
  // EOS kind must fit the system.
  CHECK_THROWS_AS(parse("[run]\nsystem = baro\n[eos]\nkind = ideal-gas\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse("[run]\nsystem = comp\n[eos]\nkind = polytropic\n"),
                  ConfigError);
  // When the file stays silent, the kind follows the system.
  CHECK(parse("[run]\nsystem = comp\n").eos.kind == EosKind::ideal_gas);
  CHECK(parse("[run]\nsystem = baro\n").eos.kind == EosKind::polytropic);
}

TEST_CASE("comments, spacing, and both comment markers are accepted") {
  const RunConfig cfg = parse("# leading comment\n"
                              "[run]\n"
                              "  system = mhd  ; trailing comment\n"
                              "\n"
                              "n=16\n"
                              "[ic]\nname = orszag-tang\n");
  CHECK(cfg.system == SystemKind::mhd);
  CHECK(cfg.n == 16);
  CHECK(cfg.ic.name == "orszag-tang");
}

TEST_CASE("timeseries CSV round trip preserves every bit") {
  TimeSeries ts;
  ts.system = SystemKind::comp_euler;
  ts.n = 32;
  ts.L = two_pi;
  BudgetReport r;
  r.kind = ts.system;
  r.t = 0.1;
  r.H = 1.0 / 3.0;
  r.E0 = 0.1; // not exactly representable; must survive the trip
  r.E = 1e300;
  r.E0B = std::numeric_limits<double>::quiet_NaN(); // empty cell
  r.dHdt_source = -2.5e-17;
  r.dHdt_direct = 4.9e-324; // subnormal
  r.q_maxnorm = 0.0;
  r.residual_maxnorm = 1e-12;
  r.residual_l2 = 7.0;
  r.bound_rhs = std::numeric_limits<double>::quiet_NaN();
  r.divu_l1 = 123456789.123456789;
  r.mass = 248.05021344239853;
  ts.reports = {r};

  std::ostringstream out;
  write_timeseries_csv(out, ts);
  std::istringstream in(out.str());
  const TimeSeries back = read_timeseries_csv(in, "mem");

  CHECK(back.system == ts.system);
  CHECK(back.n == 32);
  CHECK(back.L == ts.L);
  REQUIRE(back.reports.size() == 1);
  const BudgetReport& b = back.reports[0];
  CHECK(b.t == r.t);
  CHECK(b.H == r.H);
  CHECK(b.E0 == r.E0);
  CHECK(b.E == r.E);
  CHECK(std::isnan(b.E0B));
  CHECK(b.dHdt_source == r.dHdt_source);
  CHECK(b.dHdt_direct == r.dHdt_direct);
  CHECK(b.q_maxnorm == r.q_maxnorm);
  CHECK(b.residual_maxnorm == r.residual_maxnorm);
  CHECK(std::isnan(b.bound_rhs));
  CHECK(b.divu_l1 == r.divu_l1);
  CHECK(b.mass == r.mass);
}

TEST_CASE("timeseries CSV format details") {
  TimeSeries ts;
  ts.system = SystemKind::ii_euler;
  ts.n = 16;
  ts.L = two_pi;
  ts.reports.emplace_back();
  std::ostringstream out;
  write_timeseries_csv(out, ts);
  const std::string text = out.str();
  CHECK(text.rfind("# helibox-timeseries v1 system=ii-euler n=16 L=", 0) ==
        0);
  CHECK(text.find("t,H,E0,E,E0B,dHdt_source,dHdt_direct,q_maxnorm,"
                  "residual_maxnorm,residual_l2,bound_rhs,divu_l1,mass\n") !=
        std::string::npos);

  SUBCASE("malformed rows are rejected") {
    std::istringstream bad1(
        "# helibox-timeseries v1 system=ii-euler n=16 L=6.28\n"
        "t,H,E0,E,E0B,dHdt_source,dHdt_direct,q_maxnorm,residual_maxnorm,"
        "residual_l2,bound_rhs,divu_l1,mass\n"
        "0,1,2\n");
    CHECK_THROWS_AS(read_timeseries_csv(bad1, "mem"), ConfigError);
    std::istringstream bad2("not a header\n");
    CHECK_THROWS_AS(read_timeseries_csv(bad2, "mem"), ConfigError);
    std::istringstream bad3(
        "# helibox-timeseries v2 system=ii-euler n=16 L=6.28\n");
    CHECK_THROWS_AS(read_timeseries_csv(bad3, "mem"), ConfigError);
  }
}

TEST_CASE("snapshot round trip is bit-exact for every system shape") {
  const GridPtr g = make_grid(16);
  struct Case {
    SystemKind kind;
    Eos eos;
    IcParams ic;
  };
  Eos poly;
  poly.kind = EosKind::polytropic;
  poly.gamma = 2.0;
  Eos ig;
  ig.kind = EosKind::ideal_gas;
  ig.gamma = 1.4;
  IcParams plain;
  IcParams strat;
  strat.rho_eps = 0.3;
  IcParams ot;
  ot.name = "orszag-tang";

  const Case cases[] = {{SystemKind::baro_euler, poly, strat},
                        {SystemKind::ii_euler, poly, strat},
                        {SystemKind::comp_euler, ig, plain},
                        {SystemKind::mhd, ig, ot}};
  int idx = 0;
  for (const Case& c : cases) {
    SystemState s = make_initial_state(c.kind, g, c.eos, c.ic);
    s.t = 0.375 + idx;
    const std::string path =
        tmp_path("helibox_snap_" + std::to_string(idx) + ".bin");
    write_snapshot(path, s);
    const SystemState back = read_snapshot(path);
    CHECK(back.kind == s.kind);
    CHECK(back.t == s.t);
    CHECK(back.grid().n() == 16);
    CHECK(back.eos.gamma == s.eos.gamma);
    CHECK(bit_equal(back.rho, s.rho));
    for (int i = 0; i < 3; ++i)
      CHECK(bit_equal(back.u.comp(i), s.u.comp(i)));
    CHECK(back.e.has_value() == s.e.has_value());
    if (s.e)
      CHECK(bit_equal(*back.e, *s.e));
    CHECK(back.B.has_value() == s.B.has_value());
    if (s.B)
      for (int i = 0; i < 3; ++i)
        CHECK(bit_equal(back.B->comp(i), s.B->comp(i)));
    std::filesystem::remove(path);
    ++idx;
  }
}

TEST_CASE("snapshot reader rejects tampered files") {
  const GridPtr g = make_grid(16);
  SystemState s = make_initial_state(SystemKind::baro_euler, g,
                                     []{ Eos e; e.gamma = 2.0; return e; }(),
                                     IcParams{});
  const std::string path = tmp_path("helibox_snap_tamper.bin");
  write_snapshot(path, s);

  SUBCASE("truncated payload") {
    std::filesystem::resize_file(path, std::filesystem::file_size(path) - 8);
    CHECK_THROWS_AS(read_snapshot(path), ConfigError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(read_snapshot(tmp_path("does_not_exist.bin")),
                    ConfigError);
  }
  std::filesystem::remove(path);
}

TEST_CASE("runner reporting policy") {
  RunConfig cfg = parse("[run]\n"
                        "system = baro\n"
                        "n = 8\n"
                        "t_end = 0.1\n"
                        "cfl = 0.9\n"
                        "dt_max = 0.01\n"
                        "[eos]\ngamma = 2.0\n");

  SUBCASE("t_end = 0 emits the single initial report") {
    cfg.t_end = 0.0;
    const RunResult r = run_simulation(cfg);
    CHECK(r.steps_taken == 0);
    REQUIRE(r.series.reports.size() == 1);
    CHECK(r.series.reports[0].t == 0.0);
  }

  SUBCASE("fixed dt yields the stride arithmetic") {
    // cfl dt ~ 0.29 > dt_max, so every step takes dt_max = 0.01: 10 steps.
    const RunResult r = run_simulation(cfg);
    CHECK(r.steps_taken == 10);
    CHECK(r.series.reports.size() == 11);
    CHECK(r.series.reports.back().t == doctest::Approx(0.1).epsilon(1e-12));
  }

  SUBCASE("stride skips interior steps but keeps endpoints") {
    cfg.output_stride = 3;
    const RunResult r = run_simulation(cfg);
    REQUIRE(r.series.reports.size() == 5); // steps 0,3,6,9 + final
    CHECK(r.series.reports[0].t == 0.0);
    CHECK(r.series.reports.back().t == doctest::Approx(0.1).epsilon(1e-12));
  }

  SUBCASE("sink streams every emitted row") {
    int calls = 0;
    const RunResult r =
        run_simulation(cfg, [&](const BudgetReport&) { ++calls; });
    CHECK(calls == static_cast<int>(r.series.reports.size()));
  }
}

TEST_CASE("a mid-run fault still delivers the rows produced so far") {
  // A strongly compressive velocity on a coarse grid drives the density
  // through the floor within a few steps.
  RunConfig cfg = parse("[run]\n"
                        "system = baro\n"
                        "n = 8\n"
                        "t_end = 5.0\n"
                        "cfl = 0.9\n"
                        "dt_max = 0.05\n"
                        "[eos]\ngamma = 2.0\nK = 0.01\n"
                        "[ic]\ncomp_amp = 4.0\n");
  int rows = 0;
  CHECK_THROWS_AS(
      run_simulation(cfg, [&](const BudgetReport&) { ++rows; }),
      FloorError);
  CHECK(rows >= 1);
}

TEST_CASE("identical configs give byte-identical series") {
  RunConfig cfg = parse("[run]\n"
                        "system = ii\n"
                        "n = 16\n"
                        "t_end = 0.05\n"
                        "cfl = 0.5\n"
                        "[ic]\nrho_eps = 0.3\n");
  auto run_to_string = [&]() {
    std::ostringstream out;
    write_timeseries_header(out, cfg.system, cfg.n, cfg.L);
    run_simulation(cfg, [&](const BudgetReport& row) {
      write_timeseries_row(out, row);
    });
    return out.str();
  };
  const std::string a = run_to_string();
  const std::string b = run_to_string();
  CHECK(a == b);
  CHECK(a.find("nan") == std::string::npos); // NaN must print as empty
}
