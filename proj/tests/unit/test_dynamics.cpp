#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "symcool/dynamics.hpp"
#include "symcool/steady_state.hpp"

using namespace symcool;
using symcool::testing::kRadius100nmBead;
using symcool::testing::rel_diff;
using symcool::testing::reference_config;

namespace {

RateBundle bundle(double radius = symcool::testing::kRadius300nmBead) {
  return compute_rates(derive(reference_config(radius)));
}

double exact(const RateBundle& b, double n0, double t) {
  const auto law = cooling_on_law(b);
  return law.fixed_point() + (n0 - law.fixed_point()) * std::exp(-law.rate * t);
}

}  // namespace

TEST(Dynamics, MaxTimeStep) {
  const auto b = bundle();
  EXPECT_EQ(max_time_step(b), 0.1 / (b.gamma_g + b.gamma_cool).value());
}

TEST(Dynamics, RejectsOversizedStepWithBound) {
  const auto b = bundle();
  const double bound = max_time_step(b);
  try {
    evolve_occupation(b, 1.0, 1e-3, 1.01 * bound);
    FAIL();
  } catch (const StepSizeError& e) {
    EXPECT_EQ(e.bound(), bound);
    EXPECT_EQ(e.code(), ErrorCode::invalid_parameter);
  }
  EXPECT_NO_THROW(evolve_occupation(b, 1.0, 1e-3, bound));
  EXPECT_THROW(evolve_occupation(b, -1.0, 1e-3, bound), ModelError);
  EXPECT_THROW(evolve_occupation(b, 1.0, 1e-3, 0.0), ModelError);
}

TEST(Dynamics, MatchesClosedFormSolution) {
  const auto b = bundle();
  const double n0 = b.thermal_occupation;
  const double dt = 0.01 / cooling_on_law(b).rate;
  const auto trace = evolve_occupation(b, n0, 1e-3, dt);
  double worst = 0.0;
  for (const auto& s : trace.samples) worst = std::max(worst, rel_diff(s.occupation, exact(b, n0, s.time)));
  EXPECT_LT(worst, 1e-6);
}

TEST(Dynamics, CoarseStepStillStable) {
  const auto b = bundle();
  const double n0 = b.thermal_occupation;
  const auto trace = evolve_occupation(b, n0, 1e-3, max_time_step(b));
  for (const auto& s : trace.samples) {
    EXPECT_GE(s.occupation, 0.0);
    EXPECT_LT(rel_diff(s.occupation, exact(b, n0, s.time)), 1e-4);
  }
}

TEST(Dynamics, TimesStrictlyIncreasingAndEndpointsExact) {
  const auto b = bundle();
  const auto trace = evolve_occupation(b, 10.0, 3.3e-4, 0.3 * max_time_step(b), 1.7e-4);
  ASSERT_GE(trace.samples.size(), 2u);
  EXPECT_EQ(trace.samples.front().time, 0.0);
  EXPECT_EQ(trace.samples.back().time, 3.3e-4);
  bool hit_switch = false;
  for (std::size_t i = 1; i < trace.samples.size(); ++i) {
    EXPECT_GT(trace.samples[i].time, trace.samples[i - 1].time);
    EXPECT_GE(trace.samples[i].occupation, 0.0);
    if (trace.samples[i].time == 1.7e-4) hit_switch = true;
  }
  EXPECT_TRUE(hit_switch);
}

TEST(Dynamics, CoolsToTwiceSteadyStateOnSchedule) {
  const auto b = bundle();
  const double n0 = b.thermal_occupation;
  const double n_ss = steady_state(b).n_ss;
  const auto trace = evolve_occupation(b, n0, 1e-3, 0.01 / cooling_on_law(b).rate);
  const auto it = std::find_if(trace.samples.begin(), trace.samples.end(),
                               [&](const TraceSample& s) { return s.occupation <= 2.0 * n_ss; });
  ASSERT_NE(it, trace.samples.end());
  const double rate = cooling_on_law(b).rate;
  const double crossing = std::log((n0 - n_ss) / n_ss) / rate;
  EXPECT_NEAR(it->time, crossing, 0.01 / rate);
  EXPECT_LT(rel_diff(std::log(n0 / n_ss) / rate, 1.43632470528807e-4), 1e-8);
  EXPECT_LT(it->time, 1.5e-4);
}

TEST(Dynamics, ConvergesToSteadyState) {
  const auto b = bundle();
  const double n_ss = steady_state(b).n_ss;
  const double rate = cooling_on_law(b).rate;
  EXPECT_LT(rel_diff(cooling_on_law(b).fixed_point(), n_ss), 1e-15);

  // From the thermal bath the transient needs ln(nbar/n_ss / 1e-4) ~ 29 time constants.
  const auto from_bath = evolve_occupation(b, b.thermal_occupation, 1e-3, 0.01 / rate);
  EXPECT_LT(rel_diff(from_bath.samples.back().occupation, n_ss), 1e-4);

  const auto nearby = evolve_occupation(b, 10.0 * n_ss, 15.0 / rate, 0.01 / rate);
  EXPECT_LT(rel_diff(nearby.samples.back().occupation, n_ss), 1e-4);
}

TEST(Dynamics, FixedPointGivesConstantTrace) {
  const auto b = bundle();
  const double n_ss = steady_state(b).n_ss;
  const auto trace = evolve_occupation(b, n_ss, 1e-3, max_time_step(b));
  for (const auto& s : trace.samples) EXPECT_LT(rel_diff(s.occupation, n_ss), 1e-12);
}

TEST(Dynamics, ZeroDurationGivesSingleSample) {
  const auto b = bundle();
  const auto trace = evolve_occupation(b, 42.0, 0.0, max_time_step(b));
  ASSERT_EQ(trace.samples.size(), 1u);
  EXPECT_EQ(trace.samples[0].occupation, 42.0);
  EXPECT_EQ(trace.samples[0].phase, CoolingPhase::cooling_on);
}

TEST(Dynamics, ReheatsAfterSwitchOff) {
  const auto b = bundle();
  const double n_ss = steady_state(b).n_ss;
  const double dt = 0.01 / cooling_on_law(b).rate;
  const auto trace = evolve_occupation(b, n_ss, 1e-3, dt, 0.5e-3);
  std::size_t first_off = 0;
  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    if (trace.samples[i].phase == CoolingPhase::cooling_off) {
      first_off = i;
      break;
    }
  }
  ASSERT_GT(first_off, 0u);
  EXPECT_EQ(trace.samples[first_off - 1].time, 0.5e-3);
  for (std::size_t i = first_off; i < trace.samples.size(); ++i) {
    EXPECT_GT(trace.samples[i].occupation, trace.samples[i - 1].occupation);
  }
  const auto& a = trace.samples[first_off - 1];
  const auto& c = trace.samples[first_off];
  const double slope = (c.occupation - a.occupation) / (c.time - a.time);
  const double expected = sphere_heating_rate(b).value() - b.gamma_g.value() * a.occupation;
  EXPECT_LT(rel_diff(slope, expected), 1e-6);
  // Reference heating sum is about 2pi x 8.9e3 phonons/s.
  EXPECT_LT(rel_diff(slope, kTwoPi * 8.9e3), 0.05);
}

TEST(Dynamics, CoolingOffLawUsesOnlyGasDamping) {
  const auto b = bundle();
  const auto off = cooling_off_law(b);
  EXPECT_EQ(off.rate, b.gamma_g.value());
  EXPECT_EQ(off.source, sphere_heating_rate(b).value());
}

TEST(NormalModes, UncoupledModesAreDiagonal) {
  const auto wm = AngularRate::from_hz(45e3);
  const auto wa = AngularRate::from_hz(46e3);
  const auto m = normal_modes(wm, wa, AngularRate{}, AngularRate(30.0), AngularRate(2.0));
  EXPECT_LT(rel_diff(m.modes[0].frequency.value(), wm.value()), 1e-15);
  EXPECT_LT(rel_diff(m.modes[1].frequency.value(), wa.value()), 1e-15);
  EXPECT_NEAR(m.modes[0].damping.value(), 30.0, 1e-9);
  EXPECT_NEAR(m.modes[1].damping.value(), 2.0, 1e-9);
  EXPECT_FALSE(m.resolved);

  const auto degenerate = normal_modes(wm, wm, AngularRate{}, AngularRate{}, AngularRate{});
  EXPECT_EQ(degenerate.modes[0].frequency, wm);
  EXPECT_EQ(degenerate.modes[1].frequency, wm);
  EXPECT_EQ(degenerate.splitting.value(), 0.0);
}

TEST(NormalModes, ResonantUndampedSplitting) {
  const auto w = AngularRate::from_hz(45e3);
  const auto g = AngularRate::from_hz(1.1e3);
  const auto m = normal_modes(w, w, g, AngularRate{}, AngularRate{});
  EXPECT_LT(rel_diff(m.splitting.value(), 2.0 * g.value()), 1e-10);
  EXPECT_LT(rel_diff(m.splitting.hz(), 2.2e3), 1e-10);
  EXPECT_LT(rel_diff(m.modes[0].frequency.value(), (w - g).value()), 1e-12);
  EXPECT_LT(rel_diff(m.modes[1].frequency.value(), (w + g).value()), 1e-12);
  EXPECT_TRUE(m.resolved);
}

TEST(NormalModes, MatchesEigenSolver) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> freq(1e4, 1e6), coupling(0.0, 5e4), damping(0.0, 1e5);
  const std::complex<double> i(0.0, 1.0);
  for (int n = 0; n < 500; ++n) {
    const double wm = freq(rng), wa = freq(rng), g = coupling(rng), gm = damping(rng), ga = damping(rng);
    Eigen::Matrix2cd m;
    m << -i * wm - gm / 2.0, -i * g, -i * g, -i * wa - ga / 2.0;
    Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(m, false);
    std::array<std::complex<double>, 2> ev{solver.eigenvalues()(0), solver.eigenvalues()(1)};
    std::sort(ev.begin(), ev.end(), [](auto a, auto b) { return -a.imag() < -b.imag(); });

    const auto modes = normal_modes(AngularRate(wm), AngularRate(wa), AngularRate(g), AngularRate(gm), AngularRate(ga));
    const double scale = std::max({wm, wa, g, gm, ga});
    for (std::size_t k = 0; k < 2; ++k) {
      EXPECT_NEAR(modes.modes[k].frequency.value(), -ev[k].imag(), 1e-10 * scale);
      EXPECT_NEAR(modes.modes[k].damping.value(), -2.0 * ev[k].real(), 1e-10 * scale);
    }
    EXPECT_NEAR(modes.splitting.value(), std::abs(ev[1].imag() - ev[0].imag()), 1e-10 * scale);
  }
}

TEST(NormalModes, ContinuousInCoupling) {
  const auto w = AngularRate::from_hz(45e3);
  const auto wa = AngularRate::from_hz(45.2e3);
  auto at = [&](double g) { return normal_modes(w, wa, AngularRate(g), AngularRate(100.0), AngularRate(5.0)); };
  for (double g = 0.0; g < 5e3; g += 97.0) {
    const auto a = at(g);
    const auto b = at(g + 1e-3);
    for (std::size_t k = 0; k < 2; ++k) {
      EXPECT_LT(std::abs(a.modes[k].frequency.value() - b.modes[k].frequency.value()), 1e-1);
      EXPECT_LT(std::abs(a.modes[k].damping.value() - b.modes[k].damping.value()), 1e-1);
    }
  }
}

TEST(NormalModes, SmallBeadIsResolved) {
  const auto b = bundle(kRadius100nmBead);
  const auto m = normal_modes(b);
  EXPECT_TRUE(m.resolved);
  EXPECT_EQ(m.resolved,
            2.0 * b.g.value() > 0.5 * (b.gamma_m_diff + b.gamma_sc + b.gamma_th + b.gamma_at_diff).value());
}
