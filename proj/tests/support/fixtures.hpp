#pragma once

#include <cmath>
#include <string>

#include "symcool/system_model.hpp"

namespace symcool::testing {

inline constexpr double kRadius300nmBead = 150e-9;
inline constexpr double kRadius100nmBead = 50e-9;

// Reference design point built in code; must match configs/table1_*.cfg.
inline SystemConfig reference_config(double radius = kRadius300nmBead) {
  SystemConfig c;
  c.mode = DerivationMode::frequency_anchored;
  c.sphere.radius = radius;
  c.atoms.axial_frequency = AngularRate::from_hz(45e3);
  c.cavity.detection_power = 10e-6;
  return c;
}

inline std::string config_path(const std::string& name) { return std::string(SYMCOOL_CONFIG_DIR) + "/" + name; }

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace symcool::testing
