// symcool: command-line front end for the sympathetic-cooling model.
//
// Exit codes: 0 success, 1 I/O failure, 2 validation failure, 3 infeasible.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "symcool/config_file.hpp"
#include "symcool/dynamics.hpp"
#include "symcool/number_format.hpp"
#include "symcool/optimize.hpp"
#include "symcool/report.hpp"
#include "symcool/sensitivity.hpp"
#include "symcool/sweep.hpp"

namespace {

using namespace symcool;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_number(const std::string& s, const std::string& what) {
  std::string_view v = s;
  if (!v.empty() && v.front() == '+') v.remove_prefix(1);
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw UsageError(what + ": not a number: '" + s + "'");
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

// "min:max:steps"
GridAxis parse_axis(const std::string& s, const std::string& what, double scale, bool log_spacing) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw UsageError(what + ": expected min:max:steps, got '" + s + "'");
  const double steps = parse_number(parts[2], what);
  if (steps < 2 || steps != std::floor(steps)) throw UsageError(what + ": steps must be an integer >= 2");
  GridAxis axis{parse_number(parts[0], what) * scale, parse_number(parts[1], what) * scale,
                static_cast<std::size_t>(steps), log_spacing};
  if (!(axis.min < axis.max)) throw UsageError(what + ": range is degenerate");
  return axis;
}

struct LoadedConfig {
  ConfigDocument doc;
  SystemConfig cfg;
};

LoadedConfig load(const std::string& path) {
  LoadedConfig l;
  l.doc = load_config_file(path);
  l.cfg = build_config(l.doc);
  return l;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write output file: " + path);
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.close();
  if (!out) throw IoError("failed writing output file: " + path);
}

int cmd_report(const std::string& config_path, const std::string& format) {
  const auto l = load(config_path);
  const Evaluation e = evaluate(l.cfg);
  const ReportDocument doc = build_report(e, resolved_entries(l.cfg, &l.doc));
  std::cout << (format == "json" ? render_json(doc) : render_text(doc));
  return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::string& radius, const std::string& atoms, bool log_atoms,
              const std::string& out_path, unsigned threads) {
  const auto l = load(config_path);
  SweepSpec spec;
  spec.base = l.cfg;
  spec.held = HeldRules::from(l.cfg);
  spec.radius = parse_axis(radius, "--radius", 1e-9, false);
  spec.atoms = parse_axis(atoms, "--atoms", 1.0, log_atoms);
  const SweepResult result = run_sweep(spec, threads);

  auto out = open_output(out_path);
  write_sweep_csv(result, out);
  finish_output(out, out_path);

  const SweepSummary s = summarize(result);
  std::cout << "cells: " << result.records.size() << " (" << s.error_cells << " with errors)\n";
  if (s.min_n_ss_index) {
    const auto& r = result.records[*s.min_n_ss_index];
    std::cout << "min n_ss: " << format_number(r.n_ss) << " at a = " << format_number(r.radius * 1e9)
              << " nm, N_at = " << format_number(r.atoms) << '\n';
  }
  std::cout << "strong-coupling fraction: " << format_number(s.strong_coupling_fraction) << '\n';
  std::cout << "ground-state fraction: " << format_number(s.ground_state_fraction) << '\n';
  return kExitOk;
}

DesignVariable parse_variable(const std::string& name) {
  for (auto v : {DesignVariable::radius, DesignVariable::atom_count, DesignVariable::lattice_power,
                 DesignVariable::tweezer_power, DesignVariable::finesse}) {
    if (to_string(v) == name) return v;
  }
  throw UsageError("--vary: unsupported variable '" + name +
                   "' (use sphere.radius_nm, atoms.count, lattice.power_uw, tweezer.power_mw, cavity.finesse)");
}

double variable_scale(DesignVariable v) {
  switch (v) {
    case DesignVariable::radius:
      return 1e-9;
    case DesignVariable::lattice_power:
      return 1e-6;
    case DesignVariable::tweezer_power:
      return 1e-3;
    default:
      return 1.0;
  }
}

int cmd_optimize(const std::string& config_path, const std::vector<std::string>& vary,
                 const std::vector<std::string>& bounds, const std::vector<std::string>& require,
                 const std::string& trace_path) {
  const auto l = load(config_path);
  OptimizeSpec spec;
  spec.base = l.cfg;
  if (vary.size() != bounds.size()) throw UsageError("--bounds needs one lo:hi pair per --vary variable");
  for (std::size_t k = 0; k < vary.size(); ++k) {
    const DesignVariable v = parse_variable(vary[k]);
    const auto parts = split(bounds[k], ':');
    if (parts.size() != 2) throw UsageError("--bounds: expected lo:hi, got '" + bounds[k] + "'");
    const double scale = variable_scale(v);
    spec.variables.push_back({v, parse_number(parts[0], "--bounds") * scale, parse_number(parts[1], "--bounds") * scale});
  }
  for (const auto& r : require) {
    const auto c = parse_constraint(r);
    if (!c) throw UsageError("--require: unknown flag '" + r + "'");
    spec.constraints.push_back(*c);
  }

  const OptimizeResult result = optimize(spec);
  if (!trace_path.empty()) {
    auto out = open_output(trace_path);
    write_optimize_trace_csv(spec, result, out);
    finish_output(out, trace_path);
  }
  if (!result.feasible) {
    std::cout << "infeasible: no point within bounds satisfies the required flags\n";
    std::cout << "violated constraints:";
    for (auto c : result.violated) std::cout << ' ' << to_string(c);
    std::cout << '\n';
    return kExitInfeasible;
  }
  std::cout << "best n_ss: " << format_number(result.objective) << " (coarse grid best "
            << format_number(result.best_grid_objective) << ", " << result.iterations << " refinement passes)\n";
  for (std::size_t k = 0; k < spec.variables.size(); ++k) {
    const auto v = spec.variables[k].variable;
    double shown = result.best_values[k] / variable_scale(v);
    if (v == DesignVariable::atom_count) shown = std::round(shown);
    std::cout << "  " << to_string(v) << " = " << format_number(shown) << '\n';
  }
  std::cout << '\n' << render_text(build_report(*result.best, resolved_entries(result.best_config)));
  return kExitOk;
}

int cmd_simulate(const std::string& config_path, double t_end, std::optional<double> dt,
                 std::optional<double> cooling_off_at, std::optional<double> n0, const std::string& out_path) {
  const auto l = load(config_path);
  const Evaluation e = evaluate(l.cfg);
  const double step = dt.value_or(0.1 * max_time_step(e.rates));
  const SimulationTrace trace =
      evolve_occupation(e.rates, n0.value_or(e.rates.thermal_occupation), t_end, step, cooling_off_at);

  auto out = open_output(out_path);
  write_trace_csv(trace, out);
  finish_output(out, out_path);

  const auto& last = trace.samples.back();
  std::cout << "samples: " << trace.samples.size() << '\n';
  std::cout << "final occupation: " << format_number(last.occupation) << " at t = " << format_number(last.time)
            << " s (" << to_string(last.phase) << ")\n";
  std::cout << "steady-state n_ss: " << format_number(e.steady.n_ss) << '\n';
  if (e.steady.flags.strong_coupling) std::cout << '\n' << render_normal_modes(e.modes);
  return kExitOk;
}

int cmd_sensitivity(const std::string& config_path, const std::string& param, double rel_step) {
  const auto l = load(config_path);
  if (!is_known_key(param)) throw UsageError("--param: unknown key '" + param + "'");
  if (!is_numeric_key(param)) throw UsageError("--param: key is not numeric: '" + param + "'");
  const SensitivityResult r = sensitivity(l.cfg, param, rel_step);
  std::cout << "parameter: " << r.key << '\n'
            << "base value: " << format_number(r.base_value) << '\n'
            << "relative step: " << format_number(r.rel_step) << '\n'
            << "n_ss(-): " << format_number(r.minus.steady.n_ss) << " at " << format_number(r.minus_value) << '\n'
            << "n_ss(0): " << format_number(r.base.steady.n_ss) << " at " << format_number(r.base_value) << '\n'
            << "n_ss(+): " << format_number(r.plus.steady.n_ss) << " at " << format_number(r.plus_value) << '\n'
            << "d n_ss / d param: " << format_number(r.derivative) << '\n'
            << "elasticity d ln n_ss / d ln param: " << format_number(r.elasticity) << '\n';

  SystemConfig lo = l.cfg, hi = l.cfg;
  set_numeric_value(lo, param, r.minus_value);
  set_numeric_value(hi, param, r.plus_value);
  std::cout << "\n=== perturbed report (-) ===\n" << render_text(build_report(r.minus, resolved_entries(lo)));
  std::cout << "\n=== perturbed report (+) ===\n" << render_text(build_report(r.plus, resolved_entries(hi)));
  return kExitOk;
}

int cmd_finesse(const std::string& config_path, const std::string& range, bool log_spacing,
                const std::string& out_path) {
  const auto l = load(config_path);
  const GridAxis axis = parse_axis(range, "--range", 1.0, log_spacing);
  const auto rows = finesse_tradeoff(l.cfg, axis.nodes());
  auto out = open_output(out_path);
  write_finesse_csv(rows, out);
  finish_output(out, out_path);
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].error && (!best || rows[i].n_ss < rows[*best].n_ss)) best = i;
  }
  if (best) {
    std::cout << "min n_ss: " << format_number(rows[*best].n_ss) << " at finesse " << format_number(rows[*best].finesse)
              << '\n';
  }
  return kExitOk;
}

template <typename F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const ConfigIoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const StepSizeError& e) {
    std::cerr << "error: " << e.what() << " (max dt = " << e.bound() << " s)\n";
    return kExitValidation;
  } catch (const ModelError& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::infeasible ? kExitInfeasible : kExitValidation;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sympathetic cooling of a levitated nanosphere by a cold-atom ensemble"};
  app.require_subcommand(1);

  std::string config;
  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", config, "Configuration file (key = value)")->required();
  };

  auto* report = app.add_subcommand("report", "Evaluate a configuration and print the full report");
  add_config(report);
  std::string format = "text";
  report->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* sweep = app.add_subcommand("sweep", "Map n_ss and the strong-coupling ratio over radius and atom number");
  add_config(sweep);
  std::string radius = "50:300:26", atoms = "1e6:1e8:21", sweep_out;
  bool log_atoms = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  sweep->add_option("--radius", radius, "Sphere radius grid in nm, min:max:steps")->capture_default_str();
  sweep->add_option("--atoms", atoms, "Atom-number grid, min:max:steps")->capture_default_str();
  sweep->add_flag("--log-atoms", log_atoms, "Log-spaced atom-number grid");
  sweep->add_option("--out", sweep_out, "CSV output path")->required();
  sweep->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* opt = app.add_subcommand("optimize", "Minimise n_ss over design variables subject to regime flags");
  add_config(opt);
  std::vector<std::string> vary, bounds, require;
  std::string trace_out;
  opt->add_option("--vary", vary, "Variables to vary (comma separated)")->delimiter(',');
  opt->add_option("--bounds", bounds, "lo:hi per variable, in the variable's units (comma separated)")->delimiter(',');
  opt->add_option("--require", require, "Flags that must hold (comma separated)")->delimiter(',');
  opt->add_option("--trace", trace_out, "Search trace CSV output path");

  auto* sim = app.add_subcommand("simulate", "Integrate the phonon occupation in time");
  add_config(sim);
  double t_end = 1e-3;
  std::optional<double> dt, cooling_off_at, n0;
  std::string sim_out;
  sim->add_option("--t-end", t_end, "End time in s")->capture_default_str();
  sim->add_option("--dt", dt, "Time step in s (default 0.01 / (gamma_g + Gamma_cool))");
  sim->add_option("--cooling-off-at", cooling_off_at, "Switch the atom cooling off at this time (s)");
  sim->add_option("--n0", n0, "Initial occupation (default: thermal occupation)");
  sim->add_option("--out", sim_out, "Trace CSV output path")->required();

  auto* sens = app.add_subcommand("sensitivity", "Central-difference derivative of n_ss in one config key");
  add_config(sens);
  std::string param;
  double rel_step = 0.01;
  sens->add_option("--param", param, "Numeric config key")->required();
  sens->add_option("--rel-step", rel_step, "Relative step in (0, 0.1]")->capture_default_str();

  auto* fin = app.add_subcommand("finesse", "Sweep cavity finesse with the geometry held fixed");
  add_config(fin);
  std::string finesse_range = "100:4000:40", finesse_out;
  bool finesse_log = false;
  fin->add_option("--range", finesse_range, "Finesse grid, min:max:steps")->capture_default_str();
  fin->add_flag("--log", finesse_log, "Log-spaced finesse grid");
  fin->add_option("--out", finesse_out, "CSV output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  if (*report) return guarded([&] { return cmd_report(config, format); });
  if (*sweep) return guarded([&] { return cmd_sweep(config, radius, atoms, log_atoms, sweep_out, threads); });
  if (*opt) return guarded([&] { return cmd_optimize(config, vary, bounds, require, trace_out); });
  if (*sim) return guarded([&] { return cmd_simulate(config, t_end, dt, cooling_off_at, n0, sim_out); });
  if (*sens) return guarded([&] { return cmd_sensitivity(config, param, rel_step); });
  if (*fin) return guarded([&] { return cmd_finesse(config, finesse_range, finesse_log, finesse_out); });
  return kExitValidation;
}
