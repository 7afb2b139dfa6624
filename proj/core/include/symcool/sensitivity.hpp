#pragma once

#include <string>
#include <string_view>

#include "symcool/pipeline.hpp"

namespace symcool {

struct SensitivityResult {
  std::string key;
  double rel_step = 0.0;
  double base_value = 0.0;  // in the key's units
  double minus_value = 0.0;
  double plus_value = 0.0;
  Evaluation base;
  Evaluation minus;
  Evaluation plus;
  double derivative = 0.0;  // d n_ss / d param, per key unit
  double elasticity = 0.0;  // d ln n_ss / d ln param
};

// Central difference of n_ss in a numeric config key, stepping the key by
// +/- rel_step of its current value. Throws std::invalid_argument for
// non-numeric or unset keys and for rel_step outside (0, 0.1]; model errors
// at either perturbed point propagate as ModelError.
SensitivityResult sensitivity(const SystemConfig& cfg, std::string_view key, double rel_step,
                              const RegimeThresholds& thresholds = {});

}  // namespace symcool
