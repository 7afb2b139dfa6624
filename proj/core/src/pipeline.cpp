#include "symcool/pipeline.hpp"

namespace symcool {

Evaluation evaluate(const SystemConfig& cfg, const RegimeThresholds& thresholds) {
  Evaluation e;
  e.derived = derive(cfg);
  e.rates = compute_rates(e.derived);
  e.steady = steady_state(e.rates, thresholds);
  e.modes = normal_modes(e.rates);
  return e;
}

}  // namespace symcool
