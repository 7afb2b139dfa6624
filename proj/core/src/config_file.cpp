#include "symcool/config_file.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace symcool {

namespace {

enum class KeyKind { number, optional_number, flag, mode };

struct KeyDef {
  std::string_view name;
  KeyKind kind;
  std::function<std::optional<double>(const SystemConfig&)> get;
  std::function<void(SystemConfig&, std::optional<double>)> set;
};

// Plain SI field scaled by `unit` (display = SI / unit).
template <typename Field>
KeyDef scaled(std::string_view name, Field field, double unit) {
  return {name, KeyKind::number, [=](const SystemConfig& c) -> std::optional<double> { return field(c) / unit; },
          [=](SystemConfig& c, std::optional<double> v) { field(c) = *v * unit; }};
}

template <typename Field>
KeyDef optional_scaled(std::string_view name, Field field, double unit) {
  return {name, KeyKind::optional_number,
          [=](const SystemConfig& c) -> std::optional<double> {
            const auto& f = field(c);
            return f ? std::optional<double>(*f / unit) : std::nullopt;
          },
          [=](SystemConfig& c, std::optional<double> v) {
            if (v) {
              field(c) = *v * unit;
            } else {
              field(c).reset();
            }
          }};
}

template <typename Field>
KeyDef rate_hz(std::string_view name, Field field, double unit) {
  return {name, KeyKind::number, [=](const SystemConfig& c) -> std::optional<double> {
            return field(c).hz() / unit;
          },
          [=](SystemConfig& c, std::optional<double> v) { field(c) = AngularRate::from_hz(*v * unit); }};
}

template <typename Field>
KeyDef optional_rate_hz(std::string_view name, Field field, double unit) {
  return {name, KeyKind::optional_number,
          [=](const SystemConfig& c) -> std::optional<double> {
            const auto& f = field(c);
            return f ? std::optional<double>(f->hz() / unit) : std::nullopt;
          },
          [=](SystemConfig& c, std::optional<double> v) {
            if (v) {
              field(c) = AngularRate::from_hz(*v * unit);
            } else {
              field(c).reset();
            }
          }};
}

const std::vector<KeyDef>& key_table() {
  static const std::vector<KeyDef> table = [] {
    std::vector<KeyDef> t;
    t.push_back({"mode", KeyKind::mode,
                 [](const SystemConfig& c) -> std::optional<double> {
                   return c.mode == DerivationMode::first_principles ? 1.0 : 0.0;
                 },
                 [](SystemConfig& c, std::optional<double> v) {
                   c.mode = *v != 0.0 ? DerivationMode::first_principles : DerivationMode::frequency_anchored;
                 }});
    t.push_back(scaled("sphere.radius_nm", [](auto& c) -> auto& { return c.sphere.radius; }, 1e-9));
    t.push_back(scaled("sphere.density_kg_m3", [](auto& c) -> auto& { return c.sphere.density; }, 1.0));
    t.push_back(scaled("sphere.epsilon", [](auto& c) -> auto& { return c.sphere.epsilon; }, 1.0));
    t.push_back(optional_scaled("sphere.quality_factor", [](auto& c) -> auto& { return c.sphere.quality_factor; }, 1.0));

    t.push_back(scaled("cavity.length_cm", [](auto& c) -> auto& { return c.cavity.length; }, 1e-2));
    t.push_back(scaled("cavity.finesse", [](auto& c) -> auto& { return c.cavity.finesse; }, 1.0));
    t.push_back(scaled("cavity.waist_um", [](auto& c) -> auto& { return c.cavity.mode_waist; }, 1e-6));
    t.push_back(optional_scaled("cavity.detection_power_uw",
                                [](auto& c) -> auto& { return c.cavity.detection_power; }, 1e-6));
    t.push_back(scaled("cavity.coupling_efficiency", [](auto& c) -> auto& { return c.cavity.coupling_efficiency; }, 1.0));
    t.push_back(scaled("cavity.transmittivity", [](auto& c) -> auto& { return c.cavity.transmittivity; }, 1.0));

    t.push_back(scaled("lattice.wavelength_nm", [](auto& c) -> auto& { return c.lattice.wavelength; }, 1e-9));
    t.push_back(scaled("lattice.power_uw", [](auto& c) -> auto& { return c.lattice.power; }, 1e-6));
    t.push_back(scaled("lattice.waist_um", [](auto& c) -> auto& { return c.lattice.waist; }, 1e-6));
    t.push_back(optional_scaled("lattice.depth_recoils", [](auto& c) -> auto& { return c.lattice.depth_recoils; }, 1.0));
    t.push_back(scaled("lattice.reference_wavelength_nm",
                       [](auto& c) -> auto& { return c.lattice.reference_wavelength; }, 1e-9));

    t.push_back(scaled("tweezer.wavelength_nm", [](auto& c) -> auto& { return c.tweezer.wavelength; }, 1e-9));
    t.push_back(scaled("tweezer.power_mw", [](auto& c) -> auto& { return c.tweezer.power; }, 1e-3));
    t.push_back(scaled("tweezer.waist_um", [](auto& c) -> auto& { return c.tweezer.waist; }, 1e-6));

    t.push_back(scaled("atoms.count", [](auto& c) -> auto& { return c.atoms.count; }, 1.0));
    t.push_back(scaled("atoms.mass_amu", [](auto& c) -> auto& { return c.atoms.mass; }, constants::amu));
    t.push_back(optional_rate_hz("atoms.axial_frequency_2pi_khz",
                                 [](auto& c) -> auto& { return c.atoms.axial_frequency; }, 1e3));
    t.push_back(optional_rate_hz("atoms.radial_frequency_2pi_hz",
                                 [](auto& c) -> auto& { return c.atoms.radial_frequency; }, 1.0));
    t.push_back(optional_rate_hz("atoms.cooling_rate_2pi_hz",
                                 [](auto& c) -> auto& { return c.atoms.cooling_rate; }, 1.0));
    t.push_back(scaled("atoms.cooling_to_coupling_ratio",
                       [](auto& c) -> auto& { return c.atoms.cooling_to_coupling_ratio; }, 1.0));
    t.push_back(rate_hz("atoms.linewidth_2pi_mhz", [](auto& c) -> auto& { return c.atoms.linewidth; }, 1e6));
    t.push_back(scaled("atoms.saturation_intensity_w_m2",
                       [](auto& c) -> auto& { return c.atoms.saturation_intensity; }, 1.0));

    t.push_back(scaled("env.pressure_torr", [](auto& c) -> auto& { return c.environment.pressure; }, kPascalPerTorr));
    t.push_back(scaled("env.temperature_k", [](auto& c) -> auto& { return c.environment.temperature; }, 1.0));
    t.push_back(scaled("env.gas_mass_amu", [](auto& c) -> auto& { return c.environment.gas_mass; }, constants::amu));

    t.push_back(rate_hz("coupling.detuning_2pi_hz", [](auto& c) -> auto& { return c.detuning; }, 1.0));
    t.push_back(optional_rate_hz("sensing.frequency_2pi_hz",
                                 [](auto& c) -> auto& { return c.analysis_frequency; }, 1.0));

    t.push_back(scaled("noise.intensity_psd_per_hz", [](auto& c) -> auto& { return c.noise.intensity_psd; }, 1.0));
    t.push_back(scaled("noise.pointing_psd_m2_per_hz", [](auto& c) -> auto& { return c.noise.pointing_psd; }, 1.0));
    t.push_back(optional_scaled("noise.position_ms_m2",
                                [](auto& c) -> auto& { return c.noise.position_mean_square; }, 1.0));
    t.push_back({"noise.include_in_nss", KeyKind::flag,
                 [](const SystemConfig& c) -> std::optional<double> { return c.noise.include_in_nss ? 1.0 : 0.0; },
                 [](SystemConfig& c, std::optional<double> v) { c.noise.include_in_nss = *v != 0.0; }});

    t.push_back(optional_scaled("feedback.intracavity_photons",
                                [](auto& c) -> auto& { return c.feedback.intracavity_photons; }, 1.0));
    t.push_back(optional_rate_hz("feedback.linewidth_2pi_hz",
                                 [](auto& c) -> auto& { return c.feedback.measurement_linewidth; }, 1.0));
    t.push_back(optional_rate_hz("feedback.damping_2pi_hz",
                                 [](auto& c) -> auto& { return c.feedback.mechanical_damping; }, 1.0));
    return t;
  }();
  return table;
}

const KeyDef* find_key(std::string_view name) {
  for (const auto& k : key_table()) {
    if (k.name == name) return &k;
  }
  return nullptr;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

// Ten significant digits: hides unit-scaling noise (150 nm, not 149.99999999999997).
std::string shortest(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string ConfigIssue::describe() const {
  std::ostringstream os;
  if (line > 0) os << "line " << line << ": ";
  if (!key.empty()) os << key << ": ";
  os << message;
  return os.str();
}

namespace {
std::string join_issues(const std::vector<ConfigIssue>& issues) {
  std::string out = "invalid configuration";
  for (const auto& i : issues) out += "\n  " + i.describe();
  return out;
}
}  // namespace

ConfigError::ConfigError(std::vector<ConfigIssue> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

ConfigDocument parse_config_text(std::string_view text) {
  ConfigDocument doc;
  std::vector<ConfigIssue> issues;
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      issues.push_back({"", line_no, "expected 'key = value'"});
      continue;
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) {
      issues.push_back({"", line_no, "missing key"});
      continue;
    }
    if (!seen.insert(std::string(key)).second) {
      issues.push_back({std::string(key), line_no, "duplicate key"});
      continue;
    }
    doc.entries.push_back({std::string(key), std::string(value), line_no});
  }
  if (!issues.empty()) throw ConfigError(std::move(issues));
  return doc;
}

ConfigDocument load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigIoError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ConfigIoError("cannot read config file: " + path.string());
  return parse_config_text(buf.str());
}

SystemConfig build_config(const ConfigDocument& doc) {
  SystemConfig cfg;
  std::vector<ConfigIssue> issues;

  for (const auto& e : doc.entries) {
    const KeyDef* def = find_key(e.key);
    if (!def) {
      issues.push_back({e.key, e.line, "unknown key"});
      continue;
    }
    switch (def->kind) {
      case KeyKind::mode:
        if (e.value == "frequency-anchored") {
          def->set(cfg, 0.0);
        } else if (e.value == "first-principles") {
          def->set(cfg, 1.0);
        } else {
          issues.push_back({e.key, e.line, "expected 'frequency-anchored' or 'first-principles', got '" + e.value + "'"});
        }
        break;
      case KeyKind::flag:
        if (e.value == "true" || e.value == "1") {
          def->set(cfg, 1.0);
        } else if (e.value == "false" || e.value == "0") {
          def->set(cfg, 0.0);
        } else {
          issues.push_back({e.key, e.line, "expected true or false, got '" + e.value + "'"});
        }
        break;
      case KeyKind::number:
      case KeyKind::optional_number:
        if (auto v = parse_double(e.value)) {
          def->set(cfg, *v);
        } else {
          issues.push_back({e.key, e.line, "not a finite number: '" + e.value + "'"});
        }
        break;
    }
  }
  if (issues.empty()) {
    for (auto& msg : validate(cfg)) issues.push_back({"", 0, std::move(msg)});
  }
  if (!issues.empty()) throw ConfigError(std::move(issues));
  return cfg;
}

SystemConfig load_system_config(const std::filesystem::path& path) { return build_config(load_config_file(path)); }

std::vector<std::string_view> known_keys() {
  std::vector<std::string_view> out;
  for (const auto& k : key_table()) out.push_back(k.name);
  return out;
}

bool is_known_key(std::string_view key) { return find_key(key) != nullptr; }

bool is_numeric_key(std::string_view key) {
  const KeyDef* def = find_key(key);
  return def && (def->kind == KeyKind::number || def->kind == KeyKind::optional_number);
}

std::optional<double> numeric_value(const SystemConfig& cfg, std::string_view key) {
  if (!is_numeric_key(key)) throw std::invalid_argument("not a numeric config key: " + std::string(key));
  return find_key(key)->get(cfg);
}

void set_numeric_value(SystemConfig& cfg, std::string_view key, double value) {
  if (!is_numeric_key(key)) throw std::invalid_argument("not a numeric config key: " + std::string(key));
  find_key(key)->set(cfg, value);
}

std::vector<std::pair<std::string, std::string>> resolved_entries(const SystemConfig& cfg,
                                                                  const ConfigDocument* doc) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& def : key_table()) {
    if (doc) {
      bool found = false;
      for (const auto& e : doc->entries) {
        if (e.key == def.name) {
          out.emplace_back(e.key, e.value);
          found = true;
          break;
        }
      }
      if (found) continue;
    }
    const auto v = def.get(cfg);
    if (!v) continue;
    switch (def.kind) {
      case KeyKind::mode:
        out.emplace_back(std::string(def.name), to_string(cfg.mode));
        break;
      case KeyKind::flag:
        out.emplace_back(std::string(def.name), *v != 0.0 ? "true" : "false");
        break;
      default:
        out.emplace_back(std::string(def.name), shortest(*v));
    }
  }
  return out;
}

}  // namespace symcool
