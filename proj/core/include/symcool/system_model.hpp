#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symcool/constants.hpp"
#include "symcool/units.hpp"

namespace symcool {

struct Sphere {
  double radius = 150e-9;                          // m
  double density = constants::silica_density;      // kg/m^3
  double epsilon = constants::silica_epsilon;
  std::optional<double> quality_factor;            // overrides omega_m / gamma_g
};

struct Cavity {
  double length = 0.05;      // m
  double finesse = 400.0;
  double mode_waist = 5e-6;  // m
  std::optional<double> detection_power;  // W
  double coupling_efficiency = 1.0;       // eta
  double transmittivity = 1.0;            // t, atoms <-> sphere path
};

struct LatticeBeam {
  double wavelength = 780.74e-9;  // m
  double power = 62e-6;           // W
  double waist = 30e-6;           // m
  std::optional<double> depth_recoils;
  double reference_wavelength = constants::rb87_d2_wavelength;  // m
};

struct TweezerBeam {
  double wavelength = 1550e-9;  // m
  double power = 0.46;          // W
  double waist = 2e-6;          // m
};

struct AtomEnsemble {
  double count = 5e7;
  double mass = constants::rb87_mass;  // kg
  std::optional<AngularRate> axial_frequency;
  std::optional<AngularRate> radial_frequency;
  std::optional<AngularRate> cooling_rate;
  // gamma_at_cool = cooling_to_coupling_ratio * g when cooling_rate is unset.
  double cooling_to_coupling_ratio = 1.1;
  AngularRate linewidth{constants::rb87_gamma_se};
  double saturation_intensity = constants::rb87_I_sat;  // W/m^2
};

struct Environment {
  double pressure = 1e-10 * kPascalPerTorr;  // Pa
  double temperature = 300.0;                // K
  double gas_mass = constants::air_mean_molecular_mass;  // kg
};

// Laser-noise and sensing inputs. These feed the reported noise rates; they
// only enter n_ss when include_in_nss is set.
struct NoiseInputs {
  double intensity_psd = 0.0;  // S_k at 2 omega_m, 1/Hz
  double pointing_psd = 0.0;   // S_x at 2 omega_m, m^2/Hz
  std::optional<double> position_mean_square;  // <x^2>, m^2; thermal if unset
  bool include_in_nss = false;
};

struct FeedbackInputs {
  std::optional<double> intracavity_photons;
  std::optional<AngularRate> measurement_linewidth;  // kappa_MC; cavity kappa if unset
  std::optional<AngularRate> mechanical_damping;     // Gamma_m; gamma_g if unset
};

enum class DerivationMode {
  frequency_anchored,  // omega_at is an input, V0 back-computed
  first_principles,    // V0 from lattice intensity, omega_at derived
};

std::string to_string(DerivationMode mode);

struct SystemConfig {
  DerivationMode mode = DerivationMode::frequency_anchored;
  Sphere sphere;
  Cavity cavity;
  LatticeBeam lattice;
  TweezerBeam tweezer;
  AtomEnsemble atoms;
  Environment environment;
  AngularRate detuning{};  // Delta_m = omega_m - omega_at
  std::optional<AngularRate> analysis_frequency;  // Omega for the sensitivity floor
  NoiseInputs noise;
  FeedbackInputs feedback;
};

// Every quantity the rate formulas consume. All rates in rad/s, everything
// else SI.
struct DerivedSystem {
  SystemConfig config;

  double volume = 0.0;            // V, m^3
  double mass = 0.0;              // M, kg
  double mode_volume = 0.0;       // V_c, m^3
  AngularRate kappa;              // cavity linewidth
  AngularRate laser_frequency;    // omega of the lattice light
  double lattice_wavenumber = 0.0;  // k_L, 1/m
  AngularRate detuning_from_d2;   // delta
  double photon_flux_amplitude = 0.0;  // alpha
  double lattice_peak_intensity = 0.0;  // I_0, W/m^2 (standing wave)
  double lattice_depth = 0.0;     // V_0, J
  double recoil_energy = 0.0;     // E_r, J
  AngularRate omega_at;
  AngularRate omega_r;
  AngularRate omega_m;
  double atom_oscillator_length = 0.0;    // l_at, m
  double sphere_oscillator_length = 0.0;  // l_m, m
  double trap_wavenumber = 0.0;   // k_trap, 1/m
  double trap_intensity = 0.0;    // I_t, W/m^2
  double intracavity_intensity = 0.0;  // lattice light at the sphere, W/m^2
  AngularRate recoil_trap;        // omega_rec,t
  AngularRate recoil_lattice;     // omega_rec,L
  double gas_speed = 0.0;         // m/s
  double thermal_occupation = 0.0;  // nbar_m
  double q_effective = 0.0;
};

// Lists every invariant violation in cfg (empty when valid).
std::vector<std::string> validate(const SystemConfig& cfg);

// Throws ModelError (invalid_geometry, singular_configuration or
// invalid_parameter) when cfg cannot be evaluated.
DerivedSystem derive(const SystemConfig& cfg);

double recoil_energy(const AtomEnsemble& atoms, const LatticeBeam& lattice);
double gas_mean_speed(const Environment& env);

// sqrt(hbar / (2 mass omega))
double oscillator_length(double mass, AngularRate omega);

// gamma_g = 16 P / (pi vbar rho a)
AngularRate gas_damping_rate(double pressure, double mean_speed, double density, double radius);

}  // namespace symcool
