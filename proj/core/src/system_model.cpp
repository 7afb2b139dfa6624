#include "symcool/system_model.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "symcool/errors.hpp"

namespace symcool {

namespace {

using std::numbers::pi;

struct Issue {
  ErrorCode code;
  std::string message;
};

std::vector<Issue> collect_issues(const SystemConfig& cfg) {
  std::vector<Issue> out;
  auto geometry = [&](bool ok, const char* msg) {
    if (!ok) out.push_back({ErrorCode::invalid_geometry, msg});
  };
  auto param = [&](bool ok, const char* msg) {
    if (!ok) out.push_back({ErrorCode::invalid_parameter, msg});
  };
  auto unit_interval = [](double x) { return x > 0.0 && x <= 1.0; };

  const auto& s = cfg.sphere;
  geometry(s.radius > 0.0, "sphere radius must be positive");
  param(s.density > 0.0, "sphere density must be positive");
  param(s.epsilon > 1.0, "sphere dielectric constant must exceed 1");
  param(!s.quality_factor || *s.quality_factor > 0.0, "quality factor must be positive");

  const auto& cav = cfg.cavity;
  geometry(cav.length > 0.0, "cavity length must be positive");
  param(cav.finesse > 0.0, "cavity finesse must be positive");
  geometry(cav.mode_waist > 0.0, "cavity mode waist must be positive");
  param(!cav.detection_power || *cav.detection_power > 0.0, "detection power must be positive");
  param(unit_interval(cav.coupling_efficiency), "coupling efficiency must lie in (0, 1]");
  param(unit_interval(cav.transmittivity), "path transmittivity must lie in (0, 1]");

  const auto& lat = cfg.lattice;
  geometry(lat.wavelength > 0.0, "lattice wavelength must be positive");
  param(lat.power >= 0.0, "lattice power must be non-negative");
  geometry(lat.waist > 0.0, "lattice waist must be positive");
  param(!lat.depth_recoils || *lat.depth_recoils > 0.0, "lattice depth must be positive");
  geometry(lat.reference_wavelength > 0.0, "reference wavelength must be positive");

  const auto& tw = cfg.tweezer;
  geometry(tw.wavelength > 0.0, "tweezer wavelength must be positive");
  param(tw.power >= 0.0, "tweezer power must be non-negative");
  geometry(tw.waist > 0.0, "tweezer waist must be positive");

  const auto& at = cfg.atoms;
  param(at.count >= 0.0, "atom count must be non-negative");
  param(at.mass > 0.0, "atom mass must be positive");
  param(!at.axial_frequency || at.axial_frequency->value() > 0.0, "axial frequency must be positive");
  param(!at.radial_frequency || at.radial_frequency->value() > 0.0, "radial frequency must be positive");
  param(!at.cooling_rate || at.cooling_rate->value() >= 0.0, "atom cooling rate must be non-negative");
  param(at.cooling_to_coupling_ratio > 0.0, "cooling-to-coupling ratio must be positive");
  param(at.linewidth.value() > 0.0, "atomic linewidth must be positive");
  param(at.saturation_intensity > 0.0, "saturation intensity must be positive");
  param(cfg.mode != DerivationMode::frequency_anchored || at.axial_frequency.has_value(),
        "frequency-anchored mode requires the atom axial frequency");

  const auto& env = cfg.environment;
  param(env.pressure >= 0.0, "gas pressure must be non-negative");
  param(env.temperature > 0.0, "temperature must be positive");
  param(env.gas_mass > 0.0, "gas molecular mass must be positive");

  param(cfg.noise.intensity_psd >= 0.0, "intensity noise PSD must be non-negative");
  param(cfg.noise.pointing_psd >= 0.0, "pointing noise PSD must be non-negative");
  param(!cfg.noise.position_mean_square || *cfg.noise.position_mean_square > 0.0,
        "mean-square position must be positive");
  param(!cfg.feedback.intracavity_photons || *cfg.feedback.intracavity_photons >= 0.0,
        "intracavity photon number must be non-negative");
  param(!cfg.feedback.measurement_linewidth || cfg.feedback.measurement_linewidth->value() > 0.0,
        "measurement cavity linewidth must be positive");
  param(!cfg.feedback.mechanical_damping || cfg.feedback.mechanical_damping->value() > 0.0,
        "mechanical damping must be positive");
  param(!cfg.analysis_frequency || cfg.analysis_frequency->value() >= 0.0,
        "analysis frequency must be non-negative");

  if (lat.wavelength > 0.0 && lat.reference_wavelength > 0.0) {
    if (lat.wavelength == lat.reference_wavelength) {
      out.push_back({ErrorCode::singular_configuration, "lattice is resonant with the atomic line (zero detuning)"});
    } else if (lat.wavelength < lat.reference_wavelength) {
      param(false, "lattice must be red-detuned from the atomic line");
    }
  }
  return out;
}

}  // namespace

std::string to_string(DerivationMode mode) {
  switch (mode) {
    case DerivationMode::frequency_anchored:
      return "frequency-anchored";
    case DerivationMode::first_principles:
      return "first-principles";
  }
  return "unknown";
}

std::vector<std::string> validate(const SystemConfig& cfg) {
  std::vector<std::string> messages;
  for (auto& issue : collect_issues(cfg)) messages.push_back(std::move(issue.message));
  return messages;
}

double recoil_energy(const AtomEnsemble& atoms, const LatticeBeam& lattice) {
  const double k = kTwoPi / lattice.wavelength;
  return constants::hbar * constants::hbar * k * k / (2.0 * atoms.mass);
}

double gas_mean_speed(const Environment& env) {
  return std::sqrt(8.0 * constants::k_B * env.temperature / (pi * env.gas_mass));
}

double oscillator_length(double mass, AngularRate omega) {
  return std::sqrt(constants::hbar / (2.0 * mass * omega.value()));
}

AngularRate gas_damping_rate(double pressure, double mean_speed, double density, double radius) {
  return AngularRate(16.0 * pressure / (pi * mean_speed * density * radius));
}

DerivedSystem derive(const SystemConfig& cfg) {
  if (auto issues = collect_issues(cfg); !issues.empty()) {
    throw ModelError(issues.front().code, issues.front().message);
  }

  const double hbar = constants::hbar;
  const double c = constants::c;

  DerivedSystem d;
  d.config = cfg;
  const auto& s = cfg.sphere;
  const auto& cav = cfg.cavity;
  const auto& lat = cfg.lattice;
  const auto& at = cfg.atoms;

  d.volume = 4.0 / 3.0 * pi * s.radius * s.radius * s.radius;
  d.mass = s.density * d.volume;
  d.mode_volume = pi / 4.0 * cav.mode_waist * cav.mode_waist * cav.length;
  d.kappa = AngularRate(pi * c / (cav.length * cav.finesse));

  d.laser_frequency = AngularRate(kTwoPi * c / lat.wavelength);
  d.lattice_wavenumber = kTwoPi / lat.wavelength;
  d.detuning_from_d2 =
      AngularRate(kTwoPi * c * (lat.wavelength - lat.reference_wavelength) / (lat.wavelength * lat.wavelength));
  // P = hbar omega alpha^2 / 2pi
  d.photon_flux_amplitude = std::sqrt(kTwoPi * lat.power / (hbar * d.laser_frequency.value()));
  // Retro-reflected standing wave: four times the single-beam peak 2P/(pi w0^2).
  d.lattice_peak_intensity = 4.0 * 2.0 * lat.power / (pi * lat.waist * lat.waist);
  d.recoil_energy = recoil_energy(at, lat);

  const double k_l = d.lattice_wavenumber;
  if (cfg.mode == DerivationMode::first_principles) {
    if (lat.depth_recoils) {
      d.lattice_depth = *lat.depth_recoils * d.recoil_energy;
    } else {
      const double gamma = at.linewidth.value();
      d.lattice_depth = hbar * gamma * gamma * d.lattice_peak_intensity /
                        (12.0 * d.detuning_from_d2.value() * at.saturation_intensity);
    }
    if (!(d.lattice_depth > 0.0)) {
      throw ModelError(ErrorCode::singular_configuration, "lattice depth is zero; atoms are not trapped");
    }
    d.omega_at = AngularRate(std::sqrt(2.0 * d.lattice_depth * k_l * k_l / at.mass));
  } else {
    d.omega_at = *at.axial_frequency;
    d.lattice_depth = at.mass * d.omega_at.value() * d.omega_at.value() / (2.0 * k_l * k_l);
  }
  d.omega_r = at.radial_frequency
                  ? *at.radial_frequency
                  : AngularRate(std::sqrt(4.0 * d.lattice_depth / (at.mass * lat.waist * lat.waist)));

  d.omega_m = d.omega_at + cfg.detuning;
  if (!(d.omega_m.value() > 0.0)) {
    throw ModelError(ErrorCode::invalid_parameter, "sphere trap frequency omega_at + Delta_m must be positive");
  }

  d.atom_oscillator_length = oscillator_length(at.mass, d.omega_at);
  d.sphere_oscillator_length = oscillator_length(d.mass, d.omega_m);

  const auto& tw = cfg.tweezer;
  d.trap_wavenumber = kTwoPi / tw.wavelength;
  d.trap_intensity = 2.0 * tw.power / (pi * tw.waist * tw.waist);

  // Lattice light at the sphere: resonant buildup P F / pi, single-beam peak.
  const double input_power = hbar * d.laser_frequency.value() * d.photon_flux_amplitude *
                             d.photon_flux_amplitude / kTwoPi;
  const double circulating = cav.finesse / pi * input_power;
  d.intracavity_intensity = 2.0 * circulating / (pi * cav.mode_waist * cav.mode_waist);

  d.recoil_trap = AngularRate(hbar * d.trap_wavenumber * d.trap_wavenumber / (2.0 * d.mass));
  d.recoil_lattice = AngularRate(hbar * k_l * k_l / (2.0 * d.mass));

  const auto& env = cfg.environment;
  d.gas_speed = gas_mean_speed(env);
  d.thermal_occupation = constants::k_B * env.temperature / (hbar * d.omega_m.value());

  if (s.quality_factor) {
    d.q_effective = *s.quality_factor;
  } else {
    const AngularRate gamma_g = gas_damping_rate(env.pressure, d.gas_speed, s.density, s.radius);
    d.q_effective = gamma_g.value() > 0.0 ? d.omega_m / gamma_g : std::numeric_limits<double>::infinity();
  }
  return d;
}

}  // namespace symcool
