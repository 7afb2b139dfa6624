#include "symcool/sensitivity.hpp"

#include <stdexcept>

#include "symcool/config_file.hpp"

namespace symcool {

SensitivityResult sensitivity(const SystemConfig& cfg, std::string_view key, double rel_step,
                              const RegimeThresholds& thresholds) {
  if (!is_numeric_key(key)) throw std::invalid_argument("not a numeric config key: " + std::string(key));
  if (!(rel_step > 0.0 && rel_step <= 0.1)) throw std::invalid_argument("relative step must lie in (0, 0.1]");
  const auto value = numeric_value(cfg, key);
  if (!value) throw std::invalid_argument("config key is unset: " + std::string(key));
  if (*value == 0.0) throw std::invalid_argument("relative step of a zero-valued key is zero: " + std::string(key));

  SensitivityResult r;
  r.key = std::string(key);
  r.rel_step = rel_step;
  r.base_value = *value;
  r.minus_value = *value * (1.0 - rel_step);
  r.plus_value = *value * (1.0 + rel_step);

  SystemConfig lo = cfg;
  SystemConfig hi = cfg;
  set_numeric_value(lo, key, r.minus_value);
  set_numeric_value(hi, key, r.plus_value);

  r.base = evaluate(cfg, thresholds);
  r.minus = evaluate(lo, thresholds);
  r.plus = evaluate(hi, thresholds);
  r.derivative = (r.plus.steady.n_ss - r.minus.steady.n_ss) / (r.plus_value - r.minus_value);
  r.elasticity = r.derivative * r.base_value / r.base.steady.n_ss;
  return r;
}

}  // namespace symcool
