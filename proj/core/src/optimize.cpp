#include "symcool/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "symcool/errors.hpp"
#include "symcool/number_format.hpp"

namespace symcool {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGolden = 0.6180339887498949;

struct Probe {
  double objective = kInf;
  bool feasible = false;
  std::optional<Evaluation> eval;
  std::vector<bool> satisfied;
};

class Objective {
 public:
  explicit Objective(const OptimizeSpec& spec) : spec_(spec) {}

  SystemConfig config_for(const std::vector<double>& values) const {
    SystemConfig cfg = spec_.base;
    for (std::size_t k = 0; k < values.size(); ++k) apply_variable(cfg, spec_.variables[k].variable, values[k]);
    return cfg;
  }

  Probe probe(const std::vector<double>& values) const {
    Probe p;
    p.satisfied.assign(spec_.constraints.size(), false);
    try {
      p.eval = evaluate(config_for(values), spec_.thresholds);
    } catch (const ModelError&) {
      return p;
    }
    p.feasible = true;
    for (std::size_t c = 0; c < spec_.constraints.size(); ++c) {
      p.satisfied[c] = satisfies(p.eval->steady.flags, spec_.constraints[c]);
      p.feasible = p.feasible && p.satisfied[c];
    }
    p.objective = p.feasible ? p.eval->steady.n_ss : kInf;
    return p;
  }

 private:
  const OptimizeSpec& spec_;
};

void check_spec(const OptimizeSpec& spec) {
  for (const auto& b : spec.variables) {
    if (!(b.lower > 0.0) || !(b.upper > 0.0) || !std::isfinite(b.lower) || !std::isfinite(b.upper)) {
      throw ModelError(ErrorCode::invalid_parameter, "bounds for " + std::string(to_string(b.variable)) +
                                                         " must be finite and positive");
    }
    if (b.lower > b.upper) {
      throw ModelError(ErrorCode::invalid_parameter,
                       "lower bound exceeds upper bound for " + std::string(to_string(b.variable)));
    }
  }
  if (!(spec.tolerance > 0.0) || spec.max_iterations < 0) {
    throw ModelError(ErrorCode::invalid_parameter, "tolerance must be positive and iterations non-negative");
  }
}

}  // namespace

std::string_view to_string(DesignVariable v) {
  switch (v) {
    case DesignVariable::radius:
      return "sphere.radius_nm";
    case DesignVariable::atom_count:
      return "atoms.count";
    case DesignVariable::lattice_power:
      return "lattice.power_uw";
    case DesignVariable::tweezer_power:
      return "tweezer.power_mw";
    case DesignVariable::finesse:
      return "cavity.finesse";
  }
  return "unknown";
}

std::string_view to_string(RegimeConstraint c) {
  switch (c) {
    case RegimeConstraint::ground_state:
      return "ground_state";
    case RegimeConstraint::strong_coupling:
      return "strong_coupling";
    case RegimeConstraint::adiabatic:
      return "adiabatic";
    case RegimeConstraint::weak_coupling:
      return "weak_coupling";
    case RegimeConstraint::bad_cavity:
      return "bad_cavity";
    case RegimeConstraint::feedback_feasible:
      return "feedback_feasible";
  }
  return "unknown";
}

std::optional<RegimeConstraint> parse_constraint(std::string_view name) {
  for (auto c : {RegimeConstraint::ground_state, RegimeConstraint::strong_coupling, RegimeConstraint::adiabatic,
                 RegimeConstraint::weak_coupling, RegimeConstraint::bad_cavity, RegimeConstraint::feedback_feasible}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

bool satisfies(const RegimeFlags& f, RegimeConstraint c) {
  switch (c) {
    case RegimeConstraint::ground_state:
      return f.ground_state;
    case RegimeConstraint::strong_coupling:
      return f.strong_coupling;
    case RegimeConstraint::adiabatic:
      return f.adiabatic_ok;
    case RegimeConstraint::weak_coupling:
      return f.weak_coupling_ok;
    case RegimeConstraint::bad_cavity:
      return f.bad_cavity;
    case RegimeConstraint::feedback_feasible:
      return f.feedback_ground_state_feasible.value_or(false);
  }
  return false;
}

void apply_variable(SystemConfig& cfg, DesignVariable v, double value) {
  switch (v) {
    case DesignVariable::radius:
      cfg.sphere.radius = value;
      break;
    case DesignVariable::atom_count:
      cfg.atoms.count = std::round(value);
      break;
    case DesignVariable::lattice_power:
      cfg.lattice.power = value;
      break;
    case DesignVariable::tweezer_power:
      cfg.tweezer.power = value;
      break;
    case DesignVariable::finesse:
      cfg.cavity.finesse = value;
      break;
  }
}

OptimizeResult optimize(const OptimizeSpec& spec) {
  check_spec(spec);
  const Objective objective(spec);
  const std::size_t dims = spec.variables.size();
  OptimizeResult result;

  auto record = [&](const char* stage, int iteration, const std::vector<double>& values, const Probe& p) {
    result.trace.push_back({stage, iteration, values, p.objective, p.feasible});
  };

  auto finish_infeasible = [&](const std::vector<bool>& ever_satisfied) {
    result.feasible = false;
    for (std::size_t c = 0; c < spec.constraints.size(); ++c) {
      if (!ever_satisfied[c]) result.violated.push_back(spec.constraints[c]);
    }
    // Each constraint holds somewhere but never jointly: all of them conflict.
    if (result.violated.empty()) result.violated = spec.constraints;
    result.objective = kInf;
    result.best_grid_objective = kInf;
    return result;
  };

  if (dims == 0) {
    const Probe p = objective.probe({});
    record("base", 0, {}, p);
    result.best_config = spec.base;
    if (!p.feasible) return finish_infeasible(p.satisfied);
    result.feasible = true;
    result.best = p.eval;
    result.objective = result.best_grid_objective = p.objective;
    return result;
  }

  // Coarse grid in log space, bounds included.
  const auto per_dim = std::max<std::size_t>(
      3, static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(spec.coarse_budget), 1.0 / dims) + 1e-9)));
  std::vector<double> log_lo(dims), log_hi(dims), spacing(dims);
  for (std::size_t k = 0; k < dims; ++k) {
    log_lo[k] = std::log(spec.variables[k].lower);
    log_hi[k] = std::log(spec.variables[k].upper);
    spacing[k] = (log_hi[k] - log_lo[k]) / static_cast<double>(per_dim - 1);
  }
  auto to_values = [&](const std::vector<double>& u) {
    std::vector<double> v(dims);
    for (std::size_t k = 0; k < dims; ++k) {
      v[k] = u[k] <= log_lo[k] ? spec.variables[k].lower
             : u[k] >= log_hi[k] ? spec.variables[k].upper
                                 : std::exp(u[k]);
    }
    return v;
  };

  std::vector<bool> ever_satisfied(spec.constraints.size(), false);
  std::vector<std::size_t> index(dims, 0);
  std::vector<double> best_u;
  Probe best;
  bool done = false;
  while (!done) {
    std::vector<double> u(dims);
    for (std::size_t k = 0; k < dims; ++k) {
      u[k] = index[k] == per_dim - 1 ? log_hi[k] : log_lo[k] + static_cast<double>(index[k]) * spacing[k];
    }
    Probe p = objective.probe(to_values(u));
    record("grid", 0, to_values(u), p);
    for (std::size_t c = 0; c < p.satisfied.size(); ++c) ever_satisfied[c] = ever_satisfied[c] || p.satisfied[c];
    if (p.feasible && p.objective < best.objective) {
      best = std::move(p);
      best_u = u;
    }
    std::size_t k = 0;
    while (k < dims && ++index[k] == per_dim) index[k++] = 0;
    done = k == dims;
  }

  if (!best.feasible) {
    result.best_config = spec.base;
    return finish_infeasible(ever_satisfied);
  }
  result.best_grid_objective = best.objective;

  // Coordinate-wise golden-section refinement within one coarse cell of the
  // current point. Only strict improvements are accepted.
  std::vector<double> u = best_u;
  int iteration = 0;
  for (; iteration < spec.max_iterations; ++iteration) {
    const double before = best.objective;
    for (std::size_t k = 0; k < dims; ++k) {
      if (spacing[k] == 0.0) continue;
      double a = std::max(log_lo[k], u[k] - spacing[k]);
      double b = std::min(log_hi[k], u[k] + spacing[k]);
      auto eval_at = [&](double x) {
        std::vector<double> trial = u;
        trial[k] = x;
        Probe p = objective.probe(to_values(trial));
        record("refine", iteration + 1, to_values(trial), p);
        if (p.feasible && p.objective < best.objective) {
          best = p;
          best_u = trial;
        }
        return p.objective;
      };
      eval_at(a);
      eval_at(b);
      double x1 = b - kGolden * (b - a);
      double x2 = a + kGolden * (b - a);
      double f1 = eval_at(x1);
      double f2 = eval_at(x2);
      for (int it = 0; it < 80 && (b - a) > 1e-9 * (1.0 + std::abs(u[k])); ++it) {
        if (f1 <= f2) {
          b = x2;
          x2 = x1;
          f2 = f1;
          x1 = b - kGolden * (b - a);
          f1 = eval_at(x1);
        } else {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + kGolden * (b - a);
          f2 = eval_at(x2);
        }
      }
      u = best_u;
    }
    const double change = before - best.objective;
    if (!(change > spec.tolerance * std::abs(before))) {
      ++iteration;
      break;
    }
  }

  result.feasible = true;
  result.iterations = iteration;
  result.best_values = to_values(best_u);
  result.best_config = objective.config_for(result.best_values);
  result.objective = best.objective;
  result.best = best.eval;
  return result;
}

void write_optimize_trace_csv(const OptimizeSpec& spec, const OptimizeResult& result, std::ostream& out) {
  out << "stage,iteration";
  for (const auto& v : spec.variables) out << ',' << to_string(v.variable);
  out << ",n_ss,feasible\n";
  for (const auto& p : result.trace) {
    out << p.stage << ',' << p.iteration;
    for (std::size_t k = 0; k < p.values.size(); ++k) {
      double shown = p.values[k];
      switch (spec.variables[k].variable) {
        case DesignVariable::radius:
          shown *= 1e9;
          break;
        case DesignVariable::lattice_power:
          shown *= 1e6;
          break;
        case DesignVariable::tweezer_power:
          shown *= 1e3;
          break;
        case DesignVariable::atom_count:
          shown = std::round(shown);
          break;
        case DesignVariable::finesse:
          break;
      }
      out << ',' << format_number(shown);
    }
    out << ',' << (p.feasible ? format_number(p.n_ss) : std::string()) << ',' << (p.feasible ? 1 : 0) << '\n';
  }
}

}  // namespace symcool
