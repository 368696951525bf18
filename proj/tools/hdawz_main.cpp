// Command-line front end: compute closed-form design quantities, run
// Monte-Carlo checks, sweep SNR mismatch grids, and reproduce the bundled
// reference study.  All numeric output is deterministic given (config,
// flags, seed).

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hdawz/analytics.hpp"
#include "hdawz/config.hpp"
#include "hdawz/csv_report.hpp"
#include "hdawz/errors.hpp"
#include "hdawz/montecarlo.hpp"
#include "hdawz/params.hpp"
#include "hdawz/sweep.hpp"

namespace {

using hdawz::ErrorCode;
using hdawz::ParamSource;
using hdawz::SystemParams;
using hdawz::ValidatedParams;
namespace mc = hdawz::montecarlo;

struct CommonOpts {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string output_path;
  std::string format = "csv";
  bool db = false;
};

struct SimOpts {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t block_size = 65536;
  unsigned threads = 1;
};

void add_common(CLI::App* sub, CommonOpts& opts, bool config_required) {
  auto* config = sub->add_option("-c,--config", opts.config_path,
                                 "parameter file, key=value per line");
  if (config_required) config->required();
  sub->add_option("--set", opts.overrides,
                  "override one parameter as key=value; takes precedence over "
                  "the config file (repeatable)");
  sub->add_option("-o,--output", opts.output_path, "write output to this file");
  sub->add_option("--format", opts.format, "output separator: csv or tsv")
      ->check(CLI::IsMember({"csv", "tsv"}));
  sub->add_flag("--db", opts.db, "interpret SNR flags as decibels");
}

void add_sim(CLI::App* sub, SimOpts& opts, std::uint64_t default_trials) {
  opts.trials = default_trials;
  sub->add_option("--trials", opts.trials, "Monte-Carlo trials per point");
  sub->add_option("--seed", opts.seed, "base RNG seed");
  sub->add_option("--block-size", opts.block_size, "trials per RNG block");
  sub->add_option("--threads", opts.threads,
                  "worker threads (scheduling only, never changes results)");
}

ValidatedParams load_params(const CommonOpts& opts, bool default_reference) {
  ParamSource source;
  if (!opts.config_path.empty())
    source = ParamSource::from_file(opts.config_path);
  else if (default_reference)
    source = ParamSource::from_params(hdawz::sweep::reference_params());
  for (const auto& assignment : opts.overrides) source.set(assignment);
  return hdawz::validate(source.build());
}

double to_linear(double snr, bool db) { return db ? std::pow(10.0, snr / 10.0) : snr; }

char separator(const CommonOpts& opts) { return opts.format == "tsv" ? '\t' : ','; }

void write_output(const CommonOpts& opts, const std::string& content) {
  if (opts.output_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(opts.output_path, std::ios::binary);
  if (!out) hdawz::raise(ErrorCode::Usage, "cannot open output file '" + opts.output_path + "'");
  out << content;
  out.close();
  if (!out) hdawz::raise(ErrorCode::Usage, "failed writing output file '" + opts.output_path + "'");
}

void write_plot(const std::string& plot_path, const CommonOpts& opts, bool with_empirical) {
  if (plot_path.empty()) return;
  if (opts.output_path.empty())
    hdawz::raise(ErrorCode::Usage, "--plot needs -o so the script can reference the CSV");
  std::ofstream out(plot_path, std::ios::binary);
  if (!out) hdawz::raise(ErrorCode::Usage, "cannot open plot file '" + plot_path + "'");
  out << hdawz::report::render_plot_script(opts.output_path, with_empirical);
}

std::vector<mc::SchemeKind> parse_scheme_list(const std::string& text) {
  if (text.empty()) return {};
  std::vector<mc::SchemeKind> schemes;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const auto comma = text.find(',', begin);
    const auto end = comma == std::string::npos ? text.size() : comma;
    const std::string name = text.substr(begin, end - begin);
    const auto scheme = mc::parse_scheme(name);
    if (!scheme) hdawz::raise(ErrorCode::Usage, "unknown scheme '" + name + "'");
    schemes.push_back(*scheme);
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return schemes;
}

void emit_diagnostics(const std::vector<std::string>& diagnostics) {
  for (const auto& line : diagnostics) std::cerr << "note: " << line << "\n";
}

int run_compute(const CommonOpts& common) {
  const auto params = load_params(common, false);
  write_output(common, hdawz::report::render_compute(params, separator(common)));
  return 0;
}

int run_simulate(const CommonOpts& common, const SimOpts& sim,
                 const std::string& scheme_text, double snr1a_flag) {
  const auto params = load_params(common, false);
  const auto scheme = mc::parse_scheme(scheme_text);
  if (!scheme) hdawz::raise(ErrorCode::Usage, "unknown scheme '" + scheme_text + "'");
  const double snr1a = to_linear(snr1a_flag, common.db);
  const auto point = params.at_snr(snr1a);

  mc::SimulationReport report;
  if (sim.trials > 0) {
    report = mc::simulate(*scheme, params, point,
                          {sim.trials, sim.seed, sim.block_size, sim.threads});
  } else {
    report.seed = sim.seed;
  }
  if (sim.trials == 0) {
    // analytic-only summary
    hdawz::sweep::SweepSpec spec;
    spec.snr1a_grid = {snr1a};
    spec.schemes = {*scheme};
    const auto outcome = hdawz::sweep::run_sweep(params, spec);
    if (outcome.curves.empty()) {
      emit_diagnostics(outcome.diagnostics);
      hdawz::raise(ErrorCode::Usage, "scheme undefined for these parameters");
    }
    report.analytic_d = outcome.curves.front().points.front().analytic_d;
  }
  write_output(common,
               hdawz::report::render_simulation(*scheme, snr1a, point.n1a(), report));
  return 0;
}

int run_sweep_verb(const CommonOpts& common, const SimOpts& sim, double snr_min,
                   double snr_max, int points, const std::string& schemes_text,
                   const std::string& plot_path) {
  const auto params = load_params(common, false);
  double lo = std::isnan(snr_min) ? params.snr1() : to_linear(snr_min, common.db);
  double hi = std::isnan(snr_max) ? 5.0 * params.snr1() : to_linear(snr_max, common.db);

  hdawz::sweep::SweepSpec spec;
  spec.snr1a_grid = hdawz::sweep::linear_grid(lo, hi, points);
  spec.schemes = parse_scheme_list(schemes_text);
  if (sim.trials > 0)
    spec.cfg = mc::SimulationConfig{sim.trials, sim.seed, sim.block_size, sim.threads};

  const auto outcome = hdawz::sweep::run_sweep(params, spec);
  emit_diagnostics(outcome.diagnostics);
  write_output(common, hdawz::report::render_sweep(outcome, separator(common),
                                                   sim.trials, sim.seed));
  write_plot(plot_path, common, sim.trials > 0);
  return 0;
}

int run_reference_study(const CommonOpts& common, const SimOpts& sim,
                        const std::string& plot_path) {
  const auto params = load_params(common, true);
  const auto outcome = hdawz::sweep::mismatch_study(params, sim.trials, sim.seed,
                                                    sim.block_size, sim.threads);
  emit_diagnostics(outcome.diagnostics);
  write_output(common, hdawz::report::render_sweep(outcome, separator(common),
                                                   sim.trials, sim.seed));
  write_plot(plot_path, common, sim.trials > 0);
  return 0;
}

int run_exponents(const CommonOpts& common, const std::string& schemes_text) {
  const auto params = load_params(common, false);
  const auto study =
      hdawz::sweep::estimate_exponents(params, parse_scheme_list(schemes_text));
  emit_diagnostics(study.diagnostics);
  write_output(common,
               hdawz::report::render_exponents(study.estimates, separator(common)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"secure hybrid digital-analog transmission calculator"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand(
      "compute", "print every closed-form design quantity as name,value rows");
  CommonOpts compute_common;
  add_common(compute, compute_common, true);

  auto* simulate = app.add_subcommand(
      "simulate", "Monte-Carlo check of one scheme at one operating point");
  CommonOpts simulate_common;
  SimOpts simulate_sim;
  std::string simulate_scheme;
  double simulate_snr1a = 0.0;
  add_common(simulate, simulate_common, true);
  add_sim(simulate, simulate_sim, 1000000);
  simulate->add_option("--scheme", simulate_scheme,
                       "hybrid, separation, superimposed or uncoded")
      ->required();
  simulate->add_option("--snr1a", simulate_snr1a, "actual main channel SNR")
      ->required();

  auto* sweep_cmd = app.add_subcommand(
      "sweep", "distortion of each scheme over a grid of actual SNR values");
  CommonOpts sweep_common;
  SimOpts sweep_sim;
  double sweep_min = std::nan("");
  double sweep_max = std::nan("");
  int sweep_points = 41;
  std::string sweep_schemes;
  std::string sweep_plot;
  add_common(sweep_cmd, sweep_common, true);
  add_sim(sweep_cmd, sweep_sim, 0);
  sweep_cmd->add_option("--snr-min", sweep_min,
                        "grid start (default: the designed SNR)");
  sweep_cmd->add_option("--snr-max", sweep_max,
                        "grid end (default: 5x the designed SNR)");
  sweep_cmd->add_option("--points", sweep_points, "grid size")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--schemes", sweep_schemes,
                        "comma-separated subset (default: all four)");
  sweep_cmd->add_option("--plot", sweep_plot, "also write a gnuplot script here");

  auto* fig4 = app.add_subcommand(
      "fig4", "bundled reference mismatch study: all schemes, 41 points on [10, 50]");
  CommonOpts fig4_common;
  SimOpts fig4_sim;
  std::string fig4_plot;
  add_common(fig4, fig4_common, false);
  add_sim(fig4, fig4_sim, 100000);
  fig4->add_option("--plot", fig4_plot, "also write a gnuplot script here");

  auto* exponents = app.add_subcommand(
      "exponents", "distortion decay exponent of each scheme on a log grid");
  CommonOpts exponents_common;
  std::string exponents_schemes;
  add_common(exponents, exponents_common, true);
  exponents->add_option("--schemes", exponents_schemes,
                        "comma-separated subset (default: all four)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return run_compute(compute_common);
    if (simulate->parsed())
      return run_simulate(simulate_common, simulate_sim, simulate_scheme,
                          simulate_snr1a);
    if (sweep_cmd->parsed())
      return run_sweep_verb(sweep_common, sweep_sim, sweep_min, sweep_max,
                            sweep_points, sweep_schemes, sweep_plot);
    if (fig4->parsed()) return run_reference_study(fig4_common, fig4_sim, fig4_plot);
    if (exponents->parsed()) return run_exponents(exponents_common, exponents_schemes);
  } catch (const hdawz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::SingularCovariance ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
