#pragma once

#include "symcool/dynamics.hpp"
#include "symcool/rates.hpp"
#include "symcool/steady_state.hpp"
#include "symcool/system_model.hpp"

namespace symcool {

// One full model evaluation of a configuration.
struct Evaluation {
  DerivedSystem derived;
  RateBundle rates;
  SteadyStateReport steady;
  NormalModes modes;
};

Evaluation evaluate(const SystemConfig& cfg, const RegimeThresholds& thresholds = {});

}  // namespace symcool
