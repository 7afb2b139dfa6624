#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "symcool/optimize.hpp"

using namespace symcool;
using symcool::testing::kRadius100nmBead;
using symcool::testing::kRadius300nmBead;
using symcool::testing::reference_config;

TEST(Optimize, AtomCountMinimiserSitsOnUpperBound) {
  OptimizeSpec spec;
  spec.base = reference_config(kRadius100nmBead);
  spec.variables = {{DesignVariable::atom_count, 1e6, 1e8}};
  const auto r = optimize(spec);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.best_values.at(0), 1e8);
  EXPECT_EQ(r.best_config.atoms.count, 1e8);

  // Brute-force grid confirms n_ss decreases in N_at.
  double previous = INFINITY;
  for (int i = 0; i <= 50; ++i) {
    auto cfg = spec.base;
    cfg.atoms.count = std::round(1e6 * std::pow(100.0, i / 50.0));
    const double n = evaluate(cfg).steady.n_ss;
    EXPECT_LT(n, previous);
    previous = n;
  }
  EXPECT_EQ(r.objective, previous);
}

TEST(Optimize, EmptyVariableSetEvaluatesBase) {
  OptimizeSpec spec;
  spec.base = reference_config();
  const auto r = optimize(spec);
  ASSERT_TRUE(r.feasible);
  ASSERT_TRUE(r.best.has_value());
  EXPECT_EQ(r.objective, evaluate(spec.base).steady.n_ss);
  EXPECT_TRUE(r.best_values.empty());
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace[0].stage, "base");
}

TEST(Optimize, StrongCouplingInfeasibleForLargeBead) {
  OptimizeSpec spec;
  spec.base = reference_config(kRadius300nmBead);
  spec.variables = {{DesignVariable::atom_count, 1e6, 5e7}};
  spec.constraints = {RegimeConstraint::strong_coupling};
  const auto r = optimize(spec);
  EXPECT_FALSE(r.feasible);
  ASSERT_EQ(r.violated.size(), 1u);
  EXPECT_EQ(r.violated[0], RegimeConstraint::strong_coupling);

  // Brute-force grid agrees: the ratio stays below one over the whole bound.
  for (int i = 0; i <= 50; ++i) {
    auto cfg = spec.base;
    cfg.atoms.count = std::round(1e6 * std::pow(50.0, i / 50.0));
    EXPECT_LT(evaluate(cfg).steady.strong_coupling_ratio, 1.0);
  }
}

TEST(Optimize, GroundStateFeasibleForLargeBead) {
  OptimizeSpec spec;
  spec.base = reference_config(kRadius300nmBead);
  spec.variables = {{DesignVariable::atom_count, 1e6, 1e8}};
  spec.constraints = {RegimeConstraint::ground_state};
  const auto r = optimize(spec);
  ASSERT_TRUE(r.feasible);
  EXPECT_LT(r.objective, 1.0);
}

TEST(Optimize, NeverWorseThanCoarseGrid) {
  OptimizeSpec spec;
  spec.base = reference_config();
  spec.variables = {{DesignVariable::radius, 40e-9, 300e-9}, {DesignVariable::finesse, 100.0, 4000.0}};
  spec.coarse_budget = 400;
  const auto r = optimize(spec);
  ASSERT_TRUE(r.feasible);
  EXPECT_LE(r.objective, r.best_grid_objective);
  double grid_best = INFINITY;
  for (const auto& p : r.trace) {
    if (p.stage == "grid" && p.feasible) grid_best = std::min(grid_best, p.n_ss);
  }
  EXPECT_EQ(grid_best, r.best_grid_objective);
  EXPECT_EQ(r.objective, evaluate(r.best_config).steady.n_ss);
  EXPECT_GE(r.best_values[0], 40e-9);
  EXPECT_LE(r.best_values[0], 300e-9);
}

TEST(Optimize, RejectsBadBounds) {
  OptimizeSpec spec;
  spec.base = reference_config();
  spec.variables = {{DesignVariable::finesse, 0.0, 100.0}};
  EXPECT_THROW(optimize(spec), ModelError);
  spec.variables = {{DesignVariable::finesse, 200.0, 100.0}};
  EXPECT_THROW(optimize(spec), ModelError);
  spec.variables = {{DesignVariable::finesse, 100.0, INFINITY}};
  EXPECT_THROW(optimize(spec), ModelError);
}

TEST(Optimize, ApplyVariableRoundsAtomCount) {
  auto cfg = reference_config();
  apply_variable(cfg, DesignVariable::atom_count, 1234.6);
  EXPECT_EQ(cfg.atoms.count, 1235.0);
  apply_variable(cfg, DesignVariable::lattice_power, 1e-4);
  EXPECT_EQ(cfg.lattice.power, 1e-4);
}

TEST(Optimize, ConstraintNames) {
  for (auto c : {RegimeConstraint::ground_state, RegimeConstraint::strong_coupling, RegimeConstraint::adiabatic,
                 RegimeConstraint::weak_coupling, RegimeConstraint::bad_cavity, RegimeConstraint::feedback_feasible}) {
    EXPECT_EQ(parse_constraint(to_string(c)), c);
  }
  EXPECT_FALSE(parse_constraint("cold").has_value());
}

TEST(Optimize, TraceCsvIsDeterministic) {
  OptimizeSpec spec;
  spec.base = reference_config();
  spec.variables = {{DesignVariable::atom_count, 1e6, 1e8}};
  spec.coarse_budget = 50;
  auto render = [&] {
    std::ostringstream os;
    write_optimize_trace_csv(spec, optimize(spec), os);
    return os.str();
  };
  const auto a = render();
  EXPECT_EQ(a, render());
  EXPECT_EQ(a.substr(0, a.find('\n')), "stage,iteration,atoms.count,n_ss,feasible");
}
