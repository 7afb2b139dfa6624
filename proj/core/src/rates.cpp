#include "symcool/rates.hpp"

#include <cmath>
#include <numbers>

#include "symcool/errors.hpp"

namespace symcool {

namespace {

using std::numbers::pi;

double polarizability_factor(double epsilon) { return (epsilon - 1.0) / (epsilon + 2.0); }

}  // namespace

AngularRate atom_light_coupling(const DerivedSystem& d) {
  const double alpha = d.photon_flux_amplitude;
  if (!(alpha > 0.0)) {
    throw ModelError(ErrorCode::singular_configuration, "atom-light coupling needs nonzero lattice power");
  }
  const double n_at = d.config.atoms.count;
  return AngularRate(d.omega_at.value() * std::sqrt(pi * n_at) /
                     (2.0 * alpha * d.lattice_wavenumber * d.atom_oscillator_length));
}

AngularRate sphere_light_coupling(const DerivedSystem& d) {
  if (!(d.kappa.value() > 0.0)) {
    throw ModelError(ErrorCode::invalid_geometry, "cavity linewidth must be positive");
  }
  const double ratio = d.volume / d.mode_volume;
  return AngularRate(1.5 * ratio * polarizability_factor(d.config.sphere.epsilon) * d.laser_frequency.value() *
                     d.lattice_wavenumber * d.sphere_oscillator_length * d.photon_flux_amplitude /
                     d.kappa.value() / std::sqrt(pi));
}

AngularRate effective_coupling(const DerivedSystem& d) {
  if (!(d.kappa.value() > 0.0)) {
    throw ModelError(ErrorCode::invalid_geometry, "cavity linewidth must be positive");
  }
  const auto& cfg = d.config;
  const double w_at = d.omega_at.value();
  const double mass_ratio = cfg.atoms.mass * cfg.atoms.count * w_at / (d.mass * d.omega_m.value());
  return AngularRate(1.5 * (d.volume / d.mode_volume) * polarizability_factor(cfg.sphere.epsilon) *
                     (d.laser_frequency / d.kappa) * w_at * std::sqrt(mass_ratio));
}

AngularRate sympathetic_cooling_rate(AngularRate g, AngularRate gamma_at_cool, AngularRate detuning) {
  const double gc = gamma_at_cool.value();
  if (!(gc > 0.0)) {
    throw ModelError(ErrorCode::singular_configuration, "atom cooling rate must be positive");
  }
  const double dm = detuning.value();
  if (std::isinf(dm)) return AngularRate(0.0);
  const double gv = g.value();
  return AngularRate(gc * gv * gv / (dm * dm + 0.25 * gc * gc));
}

AngularRate atom_diffusion_rate(const DerivedSystem& d) {
  const double delta = d.detuning_from_d2.value();
  if (!(delta > 0.0)) {
    throw ModelError(ErrorCode::singular_configuration, "lattice detuning must be nonzero");
  }
  const double kl = d.lattice_wavenumber * d.atom_oscillator_length;
  return AngularRate(kl * kl * d.config.atoms.linewidth.value() * d.lattice_depth / (constants::hbar * delta));
}

double rayleigh_scattering_rate(double intensity, double wavelength, double volume, double epsilon) {
  const double omega = kTwoPi * constants::c / wavelength;
  const double pol = polarizability_factor(epsilon);
  const double lambda2 = wavelength * wavelength;
  return 24.0 * pi * pi * pi * intensity * volume * volume / (lambda2 * lambda2) / (constants::hbar * omega) * pol *
         pol;
}

RecoilHeating sphere_recoil_heating(const DerivedSystem& d) {
  const double eps = d.config.sphere.epsilon;
  const double w_m = d.omega_m.value();
  const double r_trap = rayleigh_scattering_rate(d.trap_intensity, d.config.tweezer.wavelength, d.volume, eps);
  const double r_lat = rayleigh_scattering_rate(d.intracavity_intensity, d.config.lattice.wavelength, d.volume, eps);
  return {AngularRate(0.4 * d.recoil_trap.value() / w_m * r_trap),
          AngularRate(0.4 * d.recoil_lattice.value() / w_m * r_lat)};
}

AngularRate radiation_pressure_diffusion(AngularRate g_m) { return AngularRate(2.0 * g_m.value() * g_m.value()); }

AngularRate gas_damping(const DerivedSystem& d) {
  const auto& cfg = d.config;
  return gas_damping_rate(cfg.environment.pressure, d.gas_speed, cfg.sphere.density, cfg.sphere.radius);
}

AngularRate thermalization_rate(double temperature, double quality_factor) {
  return AngularRate(constants::k_B * temperature / (constants::hbar * quality_factor));
}

AngularRate thermalization_rate(const DerivedSystem& d) {
  if (d.config.sphere.quality_factor) {
    return thermalization_rate(d.config.environment.temperature, *d.config.sphere.quality_factor);
  }
  // Q = omega_m / gamma_g, so k_B T / (hbar Q) = nbar_m gamma_g.
  return d.thermal_occupation * gas_damping(d);
}

AngularRate sphere_cavity_coupling(const DerivedSystem& d) {
  return AngularRate(0.75 * (d.volume / d.mode_volume) * polarizability_factor(d.config.sphere.epsilon) *
                     d.laser_frequency.value());
}

AngularRate single_phonon_coupling(const DerivedSystem& d) {
  const double dw_dz = 2.0 * d.laser_frequency.value() * sphere_cavity_coupling(d).value() / constants::c;
  return AngularRate(dw_dz * d.sphere_oscillator_length);
}

double displacement_sensitivity(const DerivedSystem& d, AngularRate analysis_frequency, double detection_power) {
  if (!(detection_power > 0.0)) {
    throw ModelError(ErrorCode::singular_configuration, "detection power must be positive");
  }
  const double w_c = d.laser_frequency.value();
  const double kappa = d.kappa.value();
  const double photon_flux = detection_power / (constants::hbar * w_c);
  const double omega = analysis_frequency.value();
  return kappa * constants::c / (4.0 * w_c * sphere_cavity_coupling(d).value()) / std::sqrt(photon_flux) *
         std::sqrt(1.0 + 4.0 * omega * omega / (kappa * kappa));
}

AngularRate intensity_noise_heating(AngularRate omega_m, double intensity_psd) {
  const double w = omega_m.value();
  return AngularRate(w * w / 4.0 * intensity_psd);
}

AngularRate pointing_noise_heating(AngularRate omega_m, double pointing_psd, double position_mean_square) {
  if (!(position_mean_square > 0.0)) {
    throw ModelError(ErrorCode::singular_configuration, "mean-square position must be positive");
  }
  const double w = omega_m.value();
  return AngularRate(w * w * pointing_psd / (4.0 * position_mean_square));
}

AngularRate transmission_degraded_cooling(AngularRate gamma_cool, double transmittivity, double coupling_efficiency) {
  auto in_unit = [](double x) { return x > 0.0 && x <= 1.0; };
  if (!in_unit(transmittivity) || !in_unit(coupling_efficiency)) {
    throw ModelError(ErrorCode::invalid_parameter, "transmittivity and coupling efficiency must lie in (0, 1]");
  }
  const double f = transmittivity * coupling_efficiency;
  return gamma_cool * (f * f);
}

double feedback_cooperativity(AngularRate g0, double intracavity_photons, AngularRate mechanical_damping,
                              AngularRate measurement_linewidth) {
  if (!(mechanical_damping.value() > 0.0) || !(measurement_linewidth.value() > 0.0)) {
    throw ModelError(ErrorCode::singular_configuration, "cooperativity needs positive damping and linewidth");
  }
  const double g = g0.value();
  return 4.0 * g * g * intracavity_photons / (mechanical_damping.value() * measurement_linewidth.value());
}

double thermal_position_variance(const DerivedSystem& d) {
  const double w = d.omega_m.value();
  return constants::k_B * d.config.environment.temperature / (d.mass * w * w);
}

RateBundle compute_rates(const DerivedSystem& d) {
  const auto& cfg = d.config;
  RateBundle b;
  b.omega_at = d.omega_at;
  b.omega_m = d.omega_m;
  b.kappa = d.kappa;
  b.thermal_occupation = d.thermal_occupation;
  b.include_noise_in_nss = cfg.noise.include_in_nss;

  b.g_at = atom_light_coupling(d);
  b.g_m = sphere_light_coupling(d);
  b.g = effective_coupling(d);

  if (cfg.atoms.cooling_rate) {
    b.gamma_at_cool = *cfg.atoms.cooling_rate;
  } else {
    b.gamma_at_cool = cfg.atoms.cooling_to_coupling_ratio * b.g;
  }
  if (!cfg.atoms.cooling_rate && b.g.value() == 0.0) {
    b.atoms_decoupled = true;
    b.gamma_cool = AngularRate(0.0);
  } else {
    b.gamma_cool = transmission_degraded_cooling(sympathetic_cooling_rate(b.g, b.gamma_at_cool, cfg.detuning),
                                                 cfg.cavity.transmittivity, cfg.cavity.coupling_efficiency);
  }

  b.gamma_at_diff = atom_diffusion_rate(d);
  const auto recoil = sphere_recoil_heating(d);
  b.gamma_sc_trap = recoil.trap;
  b.gamma_sc_lattice = recoil.lattice;
  b.gamma_sc = recoil.total();
  b.scattering_rate_trap = rayleigh_scattering_rate(d.trap_intensity, cfg.tweezer.wavelength, d.volume,
                                                    cfg.sphere.epsilon);
  b.scattering_rate_lattice = rayleigh_scattering_rate(d.intracavity_intensity, cfg.lattice.wavelength, d.volume,
                                                       cfg.sphere.epsilon);
  b.gamma_m_diff = radiation_pressure_diffusion(b.g_m);
  b.gamma_g = gas_damping(d);
  b.gamma_th = thermalization_rate(d);

  b.gamma_k = intensity_noise_heating(d.omega_m, cfg.noise.intensity_psd);
  const double x_ms = cfg.noise.position_mean_square.value_or(thermal_position_variance(d));
  b.gamma_x = pointing_noise_heating(d.omega_m, cfg.noise.pointing_psd, x_ms);

  b.cavity_coupling = sphere_cavity_coupling(d);
  b.single_phonon_coupling = single_phonon_coupling(d);
  if (cfg.cavity.detection_power) {
    b.sensitivity_floor =
        displacement_sensitivity(d, cfg.analysis_frequency.value_or(d.omega_m), *cfg.cavity.detection_power);
  }
  if (cfg.feedback.intracavity_photons) {
    const AngularRate damping = cfg.feedback.mechanical_damping.value_or(b.gamma_g);
    const AngularRate linewidth = cfg.feedback.measurement_linewidth.value_or(d.kappa);
    if (damping.value() > 0.0) {
      b.cooperativity =
          feedback_cooperativity(b.single_phonon_coupling, *cfg.feedback.intracavity_photons, damping, linewidth);
    }
  }
  return b;
}

}  // namespace symcool
