#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symcool/pipeline.hpp"

namespace symcool {

enum class DesignVariable { radius, atom_count, lattice_power, tweezer_power, finesse };

std::string_view to_string(DesignVariable v);

enum class RegimeConstraint { ground_state, strong_coupling, adiabatic, weak_coupling, bad_cavity, feedback_feasible };

std::string_view to_string(RegimeConstraint c);
std::optional<RegimeConstraint> parse_constraint(std::string_view name);

bool satisfies(const RegimeFlags& flags, RegimeConstraint c);

// Bounds in SI (m, count, W, W, dimensionless); both must be positive.
struct VariableBound {
  DesignVariable variable;
  double lower = 0.0;
  double upper = 0.0;
};

struct OptimizeSpec {
  SystemConfig base;
  std::vector<VariableBound> variables;
  std::vector<RegimeConstraint> constraints;
  RegimeThresholds thresholds;
  std::size_t coarse_budget = 20000;  // total coarse-grid evaluations
  double tolerance = 1e-4;            // relative n_ss change that ends refinement
  int max_iterations = 100;
};

struct OptimizeTracePoint {
  std::string stage;  // "base", "grid" or "refine"
  int iteration = 0;
  std::vector<double> values;
  double n_ss = 0.0;  // +inf when the point could not be evaluated
  bool feasible = false;
};

struct OptimizeResult {
  bool feasible = false;
  std::vector<double> best_values;
  SystemConfig best_config;
  std::optional<Evaluation> best;
  double objective = 0.0;
  double best_grid_objective = 0.0;
  int iterations = 0;
  std::vector<RegimeConstraint> violated;  // filled when infeasible
  std::vector<OptimizeTracePoint> trace;
};

// Applies a variable value to a config; atom counts are rounded to integers.
void apply_variable(SystemConfig& cfg, DesignVariable v, double value);

// Coarse log-spaced grid over the bounds, then coordinate-wise golden-section
// refinement in log space around the best feasible cell.
OptimizeResult optimize(const OptimizeSpec& spec);

void write_optimize_trace_csv(const OptimizeSpec& spec, const OptimizeResult& result, std::ostream& out);

}  // namespace symcool
