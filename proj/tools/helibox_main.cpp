// Command-line front end.
//
//   helibox run <config.ini>     time integration; writes timeseries.csv,
//                                snapshot.bin, lambda.txt into --output-dir
//   helibox verify [--seeds N]   manufactured-field identity suite
//   helibox budget <config.ini>  residual norms of the initial state only
//   helibox report <csv>         length-scale summary of an existing series
//
// Exit codes: 0 ok; 1 invariant/bound failure (with --strict, warnings
// escalate to this); 2 usage or config error; 3 runtime fault (density
// floor, pressure-solver divergence, I/O).

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "helibox/config.hpp"
#include "helibox/diagnostics.hpp"
#include "helibox/errors.hpp"
#include "helibox/identities.hpp"
#include "helibox/initial_conditions.hpp"
#include "helibox/operators.hpp"
#include "helibox/rhs.hpp"
#include "helibox/runner.hpp"
#include "helibox/snapshot.hpp"
#include "helibox/timeseries.hpp"

namespace {

using namespace helibox;

void apply_threads(int threads) {
  if (threads <= 0)
    return;
#ifdef _OPENMP
  omp_set_num_threads(threads);
#else
  std::cerr << "warning: built without OpenMP; --threads ignored\n";
#endif
}

void write_lambda_file(const std::string& path, const LambdaReport& lr) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ConfigError("cannot open '" + path + "' for writing");
  out << "window_T " << format_cell(lr.T) << "\n";
  out << "mean_abs_dHdt " << format_cell(lr.mean_abs_dHdt) << "\n";
  out << "varrho0 " << format_cell(lr.varrho0) << "\n";
  out << "lambda_inv " << format_cell(lr.lambda_inv) << "\n";
  out << "lambda_inv_bound " << format_cell(lr.lambda_inv_bound) << "\n";
  out << "bound_applicable " << (lr.bound_applicable ? 1 : 0) << "\n";
  out << "verdict "
      << (lr.bound_applicable ? (lr.pass ? "pass" : "fail") : "n/a") << "\n";
  if (!out)
    throw ConfigError("failed while writing '" + path + "'");
}

void print_lambda(const LambdaReport& lr) {
  std::printf("window_T        = %.17g\n", lr.T);
  std::printf("mean |dH/dt|    = %.17g\n", lr.mean_abs_dHdt);
  std::printf("mean density    = %.17g\n", lr.varrho0);
  std::printf("lambda_inv      = %.17g\n", lr.lambda_inv);
  std::printf("lambda_inv cap  = %.17g\n", lr.lambda_inv_bound);
  if (lr.bound_applicable)
    std::printf("bound verdict   = %s\n", lr.pass ? "pass" : "FAIL");
  else
    std::printf("bound verdict   = n/a (stated for the variable-density "
                "incompressible system only)\n");
}

int do_run(const std::string& config_path, const std::string& output_dir,
           bool strict) {
  const RunConfig cfg = load_config(config_path);
  std::filesystem::create_directories(output_dir);
  const std::string csv_path = output_dir + "/timeseries.csv";
  const std::string snap_path = output_dir + "/snapshot.bin";
  const std::string lambda_path = output_dir + "/lambda.txt";

  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv)
    throw ConfigError("cannot open '" + csv_path + "' for writing");
  write_timeseries_header(csv, cfg.system, cfg.n, cfg.L);

  std::vector<std::string> warnings;
  const ReportSink sink = [&](const BudgetReport& row) {
    write_timeseries_row(csv, row);
    csv.flush(); // keep the partial series on a later fault
    const GrowthBound gb = growth_bound_check(row);
    if (gb.applicable && !gb.pass) {
      char buf[128];
      std::snprintf(buf, sizeof(buf),
                    "growth bound violated at t=%.6g (margin %.3e)", row.t,
                    gb.margin);
      warnings.push_back(buf);
    }
  };

  const RunResult result = run_simulation(cfg, sink);
  if (!csv)
    throw ConfigError("failed while writing '" + csv_path + "'");
  csv.close();

  write_snapshot(snap_path, result.final_state);

  if (result.series.reports.size() >= 3) {
    const LambdaReport lr =
        lambda_h(result.series.reports, cfg.lambda_window, cfg.L);
    write_lambda_file(lambda_path, lr);
    if (lr.bound_applicable && !lr.pass)
      warnings.push_back("length-scale bound violated");
  }

  const BudgetReport& first = result.series.reports.front();
  const BudgetReport& last = result.series.reports.back();
  std::printf("system          = %s\n", to_string(cfg.system).c_str());
  std::printf("steps           = %ld\n", result.steps_taken);
  std::printf("reports         = %zu\n", result.series.reports.size());
  std::printf("t final         = %.17g\n", last.t);
  std::printf("H(0), H(T)      = %.17g, %.17g\n", first.H, last.H);
  std::printf("max |residual|  = %.17g\n", last.residual_maxnorm);
  std::printf("wrote %s\n", csv_path.c_str());
  std::printf("wrote %s\n", snap_path.c_str());

  for (const std::string& w : warnings)
    std::cerr << "warning: " << w << "\n";
  return (strict && !warnings.empty()) ? 1 : 0;
}

int do_verify(int seeds) {
  if (seeds < 1)
    throw ConfigError("--seeds must be at least 1");
  const std::vector<IdentityResult> rows = verify_all_identities(seeds);
  int failures = 0;
  std::printf("%-34s %4s %6s %13s %13s  %s\n", "identity", "n", "seed",
              "residual", "tolerance", "verdict");
  for (const IdentityResult& r : rows) {
    if (!r.pass)
      ++failures;
    std::printf("%-34s %4d %6llu %13.6e %13.6e  %s\n", r.name.c_str(), r.n,
                static_cast<unsigned long long>(r.seed), r.residual,
                r.tolerance, r.pass ? "pass" : "FAIL");
  }
  std::printf("%zu checks, %d failures\n", rows.size(), failures);
  return failures == 0 ? 0 : 1;
}

int do_budget(const std::string& config_path) {
  const RunConfig cfg = load_config(config_path);
  const GridPtr grid = make_grid(cfg.n, cfg.L);
  SystemState state =
      make_initial_state(cfg.system, grid, cfg.eos, cfg.ic, cfg.rho_floor);
  state.pressure_tol = cfg.pressure_tol;
  state.pressure_max_iter = cfg.pressure_max_iter;

  const Tendency tend = compute_rhs(state);
  const double q0 = max_norm(potential_vorticity(state));
  const double E0 = energies(state).E0;
  const BudgetReport row = make_report(state, tend, q0, E0);
  const ScalarField pv_res = pv_budget_residual(state, tend);
  const ScalarField en_res = energy_budget_residual(state, tend);

  std::printf("system                 = %s\n", to_string(cfg.system).c_str());
  std::printf("H                      = %.17g\n", row.H);
  std::printf("E0, E, E0B             = %.17g, %.17g, %.17g\n", row.E0, row.E,
              row.E0B);
  std::printf("dHdt_source            = %.17g\n", row.dHdt_source);
  std::printf("dHdt_direct            = %.17g\n", row.dHdt_direct);
  std::printf("q max-norm             = %.17g\n", row.q_maxnorm);
  std::printf("budget residual max,l2 = %.6e, %.6e\n", row.residual_maxnorm,
              row.residual_l2);
  std::printf("pv residual max        = %.6e\n", max_norm(pv_res));
  std::printf("energy residual max    = %.6e\n", max_norm(en_res));
  std::printf("divu l1                = %.17g\n", row.divu_l1);
  std::printf("mass                   = %.17g\n", row.mass);
  if (tend.pressure_iterations > 0)
    std::printf("pressure iterations    = %d (residual %.3e)\n",
                tend.pressure_iterations, tend.pressure_residual);
  return 0;
}

int do_report(const std::string& csv_path, double window,
              const std::string& output_dir, bool strict) {
  const TimeSeries ts = read_timeseries_csv(csv_path);
  if (ts.reports.size() < 3)
    throw ConfigError(csv_path +
                      ": need at least 3 rows for a length-scale report");
  const LambdaReport lr = lambda_h(ts.reports, window, ts.L);
  std::printf("system          = %s\n", to_string(ts.system).c_str());
  std::printf("rows            = %zu\n", ts.reports.size());
  print_lambda(lr);

  std::filesystem::create_directories(output_dir);
  write_lambda_file(output_dir + "/lambda.txt", lr);

  const bool warn = lr.bound_applicable && !lr.pass;
  if (warn)
    std::cerr << "warning: length-scale bound violated\n";
  return (strict && warn) ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodic-box helicity budget solver and diagnostics"};
  app.require_subcommand(1);

  std::string output_dir = ".";
  int threads = 0;
  bool strict = false;
  app.add_option("--output-dir", output_dir, "Directory for output files");
  app.add_option("--threads", threads, "OpenMP thread count (0 = default)");
  app.add_flag("--strict", strict, "Escalate invariant warnings to exit 1");

  CLI::App* run_cmd =
      app.add_subcommand("run", "Integrate a configured system in time");
  std::string run_config;
  run_cmd->add_option("config", run_config, "INI configuration file")
      ->required();

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check the analytic identity suite on manufactured fields");
  int seeds = 10;
  verify_cmd->add_option("--seeds", seeds, "Seeds per grid size");

  CLI::App* budget_cmd = app.add_subcommand(
      "budget", "Print initial-state budget residuals without stepping");
  std::string budget_config;
  budget_cmd->add_option("config", budget_config, "INI configuration file")
      ->required();

  CLI::App* report_cmd = app.add_subcommand(
      "report", "Length-scale summary of an existing time series");
  std::string report_csv;
  double window = 0.0;
  report_cmd->add_option("csv", report_csv, "timeseries.csv path")
      ->required();
  report_cmd->add_option("--window", window,
                         "Averaging window (0 = full span)");

  // Let the global options (--output-dir, --threads, --strict) appear after
  // the subcommand as well as before it.
  for (CLI::App* sub : {run_cmd, verify_cmd, budget_cmd, report_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    apply_threads(threads);
    if (run_cmd->parsed())
      return do_run(run_config, output_dir, strict);
    if (verify_cmd->parsed())
      return do_verify(seeds);
    if (budget_cmd->parsed())
      return do_budget(budget_config);
    if (report_cmd->parsed())
      return do_report(report_csv, window, output_dir, strict);
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const SolverError& e) { // also catches floor faults
    std::cerr << "runtime fault: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
