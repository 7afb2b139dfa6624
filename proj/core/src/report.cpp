#include "symcool/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "symcool/number_format.hpp"

namespace symcool {

namespace {

ReportEntry number(std::string key, double v, std::string unit = {}) {
  return {std::move(key), v, std::move(unit), false};
}

ReportEntry rate(std::string key, AngularRate r) { return {std::move(key) + "_2pi_hz", r.hz(), "Hz", true}; }

ReportEntry flag(std::string key, bool v) { return {std::move(key), v, {}, false}; }

ReportEntry text(std::string key, std::string v) { return {std::move(key), std::move(v), {}, false}; }

}  // namespace

ReportDocument build_report(const Evaluation& e,
                            const std::vector<std::pair<std::string, std::string>>& config_echo) {
  const DerivedSystem& d = e.derived;
  const RateBundle& b = e.rates;
  const SteadyStateReport& s = e.steady;
  ReportDocument doc;

  ReportSection cfg{"config", {}};
  for (const auto& [k, v] : config_echo) cfg.entries.push_back(text(k, v));
  doc.sections.push_back(std::move(cfg));

  doc.sections.push_back(
      {"derived",
       {number("sphere_volume_m3", d.volume, "m^3"),
        number("sphere_mass_kg", d.mass, "kg"),
        number("mode_volume_m3", d.mode_volume, "m^3"),
        rate("kappa", d.kappa),
        rate("laser_frequency", d.laser_frequency),
        rate("detuning_from_d2", d.detuning_from_d2),
        number("photon_flux_amplitude", d.photon_flux_amplitude, "sqrt(photons/s)"),
        number("lattice_peak_intensity_w_m2", d.lattice_peak_intensity, "W/m^2"),
        number("lattice_depth_j", d.lattice_depth, "J"),
        number("lattice_depth_recoils", d.lattice_depth / d.recoil_energy),
        number("recoil_energy_j", d.recoil_energy, "J"),
        rate("omega_at", d.omega_at),
        rate("omega_r", d.omega_r),
        rate("omega_m", d.omega_m),
        number("atom_oscillator_length_m", d.atom_oscillator_length, "m"),
        number("sphere_oscillator_length_m", d.sphere_oscillator_length, "m"),
        number("trap_intensity_w_m2", d.trap_intensity, "W/m^2"),
        number("intracavity_intensity_w_m2", d.intracavity_intensity, "W/m^2"),
        rate("recoil_trap", d.recoil_trap),
        rate("recoil_lattice", d.recoil_lattice),
        number("gas_mean_speed_m_s", d.gas_speed, "m/s"),
        number("thermal_occupation", d.thermal_occupation),
        number("q_effective", d.q_effective)}});

  ReportSection rates{"rates",
                      {rate("g_at", b.g_at), rate("g_m", b.g_m), rate("g", b.g), rate("gamma_at_cool", b.gamma_at_cool),
                       rate("Gamma_cool", b.gamma_cool), rate("gamma_at_diff", b.gamma_at_diff),
                       rate("gamma_m_diff", b.gamma_m_diff), rate("gamma_sc", b.gamma_sc),
                       rate("gamma_sc_trap", b.gamma_sc_trap), rate("gamma_sc_lattice", b.gamma_sc_lattice),
                       rate("gamma_g", b.gamma_g), rate("Gamma_th", b.gamma_th), rate("Gamma_k", b.gamma_k),
                       rate("Gamma_x", b.gamma_x),
                       number("scattering_rate_trap_per_s", b.scattering_rate_trap, "1/s"),
                       number("scattering_rate_lattice_per_s", b.scattering_rate_lattice, "1/s"),
                       rate("g_s", b.cavity_coupling), rate("g0", b.single_phonon_coupling)}};
  if (b.sensitivity_floor) {
    rates.entries.push_back(number("sensitivity_floor_m_per_rthz", *b.sensitivity_floor, "m/sqrt(Hz)"));
  }
  if (b.cooperativity) rates.entries.push_back(number("cooperativity", *b.cooperativity));
  doc.sections.push_back(std::move(rates));

  ReportSection steady{"steady_state",
                       {number("n_ss", s.n_ss), number("term_cooling_balance", s.term_cooling_balance),
                        number("term_atom_cooling_limit", s.term_atom_cooling_limit),
                        number("term_atom_diffusion_limit", s.term_atom_diffusion_limit),
                        number("strong_coupling_ratio", s.strong_coupling_ratio),
                        flag("ground_state", s.flags.ground_state), flag("strong_coupling", s.flags.strong_coupling),
                        flag("adiabatic_ok", s.flags.adiabatic_ok), flag("weak_coupling_ok", s.flags.weak_coupling_ok),
                        flag("bad_cavity", s.flags.bad_cavity)}};
  if (s.flags.feedback_ground_state_feasible) {
    steady.entries.push_back(flag("feedback_ground_state_feasible", *s.flags.feedback_ground_state_feasible));
  }
  doc.sections.push_back(std::move(steady));

  const NormalModes& m = e.modes;
  doc.sections.push_back({"normal_modes",
                          {rate("lower_mode_frequency", m.modes[0].frequency),
                           rate("lower_mode_linewidth", m.modes[0].damping),
                           rate("upper_mode_frequency", m.modes[1].frequency),
                           rate("upper_mode_linewidth", m.modes[1].damping), rate("splitting", m.splitting),
                           flag("resolved", m.resolved)}});

  ReportSection prov{"provenance", {text("mode", to_string(d.config.mode))}};
  prov.entries.push_back(text("units", "SI; rates stored in rad/s and shown as 2π × Hz"));
  prov.entries.push_back(text("oscillator_length", "sqrt(hbar / (2 mass omega))"));
  prov.entries.push_back(text("mode_volume", "(pi/4) w_c^2 L"));
  prov.entries.push_back(text("atom_cooling_rate", d.config.atoms.cooling_rate
                                                       ? std::string("configured")
                                                       : "ratio x g, ratio = " +
                                                             format_number(d.config.atoms.cooling_to_coupling_ratio)));
  prov.entries.push_back(text("tweezer_intensity", "2 P_t / (pi w_t^2)"));
  prov.entries.push_back(text("intracavity_power", "(F / pi) P"));
  prov.entries.push_back(
      text("quality_factor", d.config.sphere.quality_factor ? std::string("configured") : "omega_m / gamma_g"));
  prov.entries.push_back(text("noise_in_n_ss", d.config.noise.include_in_nss ? "included" : "excluded"));
  doc.sections.push_back(std::move(prov));
  return doc;
}

std::string render_text(const ReportDocument& doc) {
  std::ostringstream os;
  bool first = true;
  for (const auto& sec : doc.sections) {
    if (!first) os << '\n';
    first = false;
    os << '[' << sec.name << "]\n";
    for (const auto& e : sec.entries) {
      os << "  " << std::left << std::setw(34) << e.key << ' ';
      if (const auto* v = std::get_if<double>(&e.value)) {
        if (e.angular) {
          os << "2π × " << format_number(*v) << " Hz";
        } else {
          os << format_number(*v);
          if (!e.unit.empty()) os << ' ' << e.unit;
        }
      } else if (const auto* f = std::get_if<bool>(&e.value)) {
        os << (*f ? "true" : "false");
      } else {
        os << std::get<std::string>(e.value);
      }
      os << '\n';
    }
  }
  return os.str();
}

std::string render_json(const ReportDocument& doc) {
  nlohmann::ordered_json root = nlohmann::ordered_json::object();
  for (const auto& sec : doc.sections) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& e : sec.entries) {
      if (const auto* v = std::get_if<double>(&e.value)) {
        // JSON has no inf/nan; those go out as the same text the text report shows.
        if (std::isfinite(*v)) {
          obj[e.key] = *v;
        } else {
          obj[e.key] = format_number(*v);
        }
      } else if (const auto* f = std::get_if<bool>(&e.value)) {
        obj[e.key] = *f;
      } else {
        obj[e.key] = std::get<std::string>(e.value);
      }
    }
    root[sec.name] = std::move(obj);
  }
  return root.dump(2) + "\n";
}

std::string render_normal_modes(const NormalModes& m) {
  std::ostringstream os;
  os << "mode   frequency            linewidth\n";
  const char* names[2] = {"lower", "upper"};
  for (int k = 0; k < 2; ++k) {
    os << std::left << std::setw(7) << names[k] << "2π × " << std::setw(12) << format_number(m.modes[k].frequency.hz())
       << " Hz  2π × " << format_number(m.modes[k].damping.hz()) << " Hz\n";
  }
  os << "splitting 2π × " << format_number(m.splitting.hz()) << " Hz, resolved: " << (m.resolved ? "yes" : "no")
     << '\n';
  return os.str();
}

}  // namespace symcool
