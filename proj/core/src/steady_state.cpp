#include "symcool/steady_state.hpp"

#include <algorithm>

#include "symcool/errors.hpp"

namespace symcool {

AngularRate sphere_heating_rate(const RateBundle& b) {
  AngularRate heating = b.thermal_occupation * b.gamma_g + b.gamma_m_diff / 2.0 + b.gamma_sc;
  if (b.include_noise_in_nss) heating += b.gamma_k + b.gamma_x;
  return heating;
}

double strong_coupling_ratio(const RateBundle& b) {
  const AngularRate dissipation = b.gamma_at_diff + b.gamma_m_diff + b.gamma_th + b.gamma_sc;
  if (!(dissipation.value() > 0.0)) {
    throw ModelError(ErrorCode::singular_configuration, "strong-coupling ratio has zero dissipation");
  }
  return b.g / dissipation;
}

RegimeFlags classify_regimes(const RateBundle& b, const RegimeThresholds& thresholds) {
  RegimeFlags f;
  f.adiabatic_ok = b.gamma_at_cool >= b.g;
  f.weak_coupling_ok = b.g.value() <= thresholds.weak_coupling_fraction * std::min(b.omega_at, b.omega_m).value();
  f.bad_cavity = b.kappa.value() >= thresholds.bad_cavity_ratio * b.omega_m.value();
  if (b.cooperativity) {
    f.feedback_ground_state_feasible = *b.cooperativity > 8.0 * b.thermal_occupation;
  }
  return f;
}

SteadyStateReport steady_state(const RateBundle& b, const RegimeThresholds& thresholds) {
  const AngularRate damping = b.gamma_g + b.gamma_cool;
  if (!(damping.value() > 0.0)) {
    throw ModelError(ErrorCode::singular_configuration, "no damping: gamma_g + Gamma_cool is zero");
  }
  SteadyStateReport r;
  r.term_cooling_balance = sphere_heating_rate(b) / damping;
  if (!b.atoms_decoupled) {
    if (!(b.gamma_at_cool.value() > 0.0)) {
      throw ModelError(ErrorCode::singular_configuration, "atom cooling rate must be positive");
    }
    if (!(b.omega_at.value() > 0.0)) {
      throw ModelError(ErrorCode::singular_configuration, "atom trap frequency must be positive");
    }
    const double x = b.gamma_at_cool / (4.0 * b.omega_at);
    r.term_atom_cooling_limit = x * x;
    r.term_atom_diffusion_limit = b.gamma_at_diff / (2.0 * b.gamma_at_cool);
  }
  r.n_ss = r.term_cooling_balance + r.term_atom_cooling_limit + r.term_atom_diffusion_limit;
  r.strong_coupling_ratio = strong_coupling_ratio(b);
  r.flags = classify_regimes(b, thresholds);
  r.flags.ground_state = r.n_ss < 1.0;
  r.flags.strong_coupling = r.strong_coupling_ratio > 1.0;
  return r;
}

}  // namespace symcool
