#pragma once

#include <optional>

#include "symcool/system_model.hpp"
#include "symcool/units.hpp"

namespace symcool {

// Every coupling, cooling, heating and damping rate of the model (rad/s),
// plus the sensing figures derived from the same geometry.
struct RateBundle {
  AngularRate g_at;
  AngularRate g_m;
  AngularRate g;
  AngularRate gamma_at_cool;
  AngularRate gamma_cool;  // includes the t^2 eta^2 path factor
  AngularRate gamma_at_diff;
  AngularRate gamma_m_diff;
  AngularRate gamma_sc;
  AngularRate gamma_sc_trap;
  AngularRate gamma_sc_lattice;
  AngularRate gamma_g;
  AngularRate gamma_th;
  AngularRate gamma_k;
  AngularRate gamma_x;
  double thermal_occupation = 0.0;
  double scattering_rate_trap = 0.0;     // photons/s
  double scattering_rate_lattice = 0.0;  // photons/s
  AngularRate cavity_coupling;           // g_s
  AngularRate single_phonon_coupling;    // g0 = (d omega_c / dz) l_m
  std::optional<double> sensitivity_floor;  // m/sqrt(Hz)
  std::optional<double> cooperativity;      // c_m

  // Carried along so steady-state analysis needs nothing else.
  AngularRate omega_at;
  AngularRate omega_m;
  AngularRate kappa;
  bool include_noise_in_nss = false;
  // No coupling and no explicit atom cooling rate: the ensemble drops out of n_ss.
  bool atoms_decoupled = false;
};

// g_at = omega_at sqrt(pi N_at) / (2 alpha k_L l_at)
AngularRate atom_light_coupling(const DerivedSystem& d);

// g_m = (3/2)(V/V_c)((eps-1)/(eps+2)) omega k_L l_m (alpha/kappa) / sqrt(pi)
AngularRate sphere_light_coupling(const DerivedSystem& d);

// Closed form of g = 2 g_at g_m; independent of alpha.
AngularRate effective_coupling(const DerivedSystem& d);

// Gamma_cool = gamma_at_cool g^2 / (Delta_m^2 + (gamma_at_cool/2)^2)
AngularRate sympathetic_cooling_rate(AngularRate g, AngularRate gamma_at_cool, AngularRate detuning);

AngularRate atom_diffusion_rate(const DerivedSystem& d);

// Rayleigh scattering rate in photons/s for light of intensity I (W/m^2) and
// wavelength (m) on a sphere of volume V.
double rayleigh_scattering_rate(double intensity, double wavelength, double volume, double epsilon);

struct RecoilHeating {
  AngularRate trap;
  AngularRate lattice;
  AngularRate total() const { return trap + lattice; }
};
RecoilHeating sphere_recoil_heating(const DerivedSystem& d);

AngularRate radiation_pressure_diffusion(AngularRate g_m);

AngularRate gas_damping(const DerivedSystem& d);

AngularRate thermalization_rate(const DerivedSystem& d);
// k_B T / (hbar Q)
AngularRate thermalization_rate(double temperature, double quality_factor);

// g_s = (3V/4V_c)((eps-1)/(eps+2)) omega_c, evaluated for the lattice light.
AngularRate sphere_cavity_coupling(const DerivedSystem& d);
// g0 = (2 omega_c g_s / c) l_m
AngularRate single_phonon_coupling(const DerivedSystem& d);

// Shot-noise displacement floor (m/sqrt(Hz)) along the cavity axis. The
// coupling in the prefactor is g_s.
double displacement_sensitivity(const DerivedSystem& d, AngularRate analysis_frequency, double detection_power);

// Gamma_k = (omega_m^2 / 4) S_k(2 omega_m)
AngularRate intensity_noise_heating(AngularRate omega_m, double intensity_psd);
// Gamma_x = omega_m^2 S_x(2 omega_m) / (4 <x^2>)
AngularRate pointing_noise_heating(AngularRate omega_m, double pointing_psd, double position_mean_square);

AngularRate transmission_degraded_cooling(AngularRate gamma_cool, double transmittivity, double coupling_efficiency);

// c_m = 4 g0^2 nbar_c / (Gamma_m kappa_MC)
double feedback_cooperativity(AngularRate g0, double intracavity_photons, AngularRate mechanical_damping,
                              AngularRate measurement_linewidth);

// Thermal mean-square displacement k_B T / (M omega_m^2).
double thermal_position_variance(const DerivedSystem& d);

RateBundle compute_rates(const DerivedSystem& d);

}  // namespace symcool
