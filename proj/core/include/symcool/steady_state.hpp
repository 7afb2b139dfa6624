#pragma once

#include <optional>

#include "symcool/rates.hpp"

namespace symcool {

struct RegimeThresholds {
  double weak_coupling_fraction = 0.1;  // weak coupling: g <= fraction * min(omega_at, omega_m)
  double bad_cavity_ratio = 10.0;       // bad cavity: kappa >= ratio * omega_m
};

struct RegimeFlags {
  bool ground_state = false;
  bool strong_coupling = false;
  bool adiabatic_ok = false;
  bool weak_coupling_ok = false;
  bool bad_cavity = false;
  std::optional<bool> feedback_ground_state_feasible;  // only when c_m is known
};

struct SteadyStateReport {
  double n_ss = 0.0;
  // (gamma_g nbar_m + gamma_m_diff/2 + gamma_sc) / (gamma_g + Gamma_cool)
  double term_cooling_balance = 0.0;
  // (gamma_at_cool / (4 omega_at))^2
  double term_atom_cooling_limit = 0.0;
  // gamma_at_diff / (2 gamma_at_cool)
  double term_atom_diffusion_limit = 0.0;
  double strong_coupling_ratio = 0.0;
  RegimeFlags flags;
};

// Sphere heating numerator: gamma_g nbar_m + gamma_m_diff / 2 + gamma_sc, plus
// Gamma_k + Gamma_x when the bundle asks for the noise terms.
AngularRate sphere_heating_rate(const RateBundle& b);

// g / (gamma_at_diff + gamma_m_diff + Gamma_th + gamma_sc)
double strong_coupling_ratio(const RateBundle& b);

RegimeFlags classify_regimes(const RateBundle& b, const RegimeThresholds& thresholds = {});

SteadyStateReport steady_state(const RateBundle& b, const RegimeThresholds& thresholds = {});

}  // namespace symcool
