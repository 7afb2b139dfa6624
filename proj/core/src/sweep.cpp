#include "symcool/sweep.hpp"

#include <atomic>
#include <cmath>
#include <ostream>
#include <thread>

#include "symcool/number_format.hpp"
#include "symcool/pipeline.hpp"

namespace symcool {

std::vector<double> GridAxis::nodes() const {
  std::vector<double> out(steps);
  if (steps == 0) return out;
  const double last = static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) {
    const double f = steps == 1 ? 0.0 : static_cast<double>(i) / last;
    if (log_spacing) {
      const double lo = std::log10(min);
      const double hi = std::log10(max);
      out[i] = std::pow(10.0, lo + f * (hi - lo));
    } else {
      out[i] = min + f * (max - min);
    }
  }
  out.front() = min;
  if (steps > 1) out.back() = max;
  return out;
}

HeldRules HeldRules::from(const SystemConfig& cfg) {
  return {cfg.atoms.cooling_to_coupling_ratio, cfg.detuning, cfg.mode};
}

void check_sweep_spec(const SweepSpec& spec) {
  auto check_axis = [](const GridAxis& a, const char* name) {
    const std::string n(name);
    if (a.steps < 2) throw ModelError(ErrorCode::invalid_parameter, n + " axis needs at least 2 steps");
    if (!(a.min < a.max)) throw ModelError(ErrorCode::invalid_parameter, n + " axis range is degenerate");
    if (a.log_spacing && !(a.min > 0.0)) {
      throw ModelError(ErrorCode::invalid_parameter, n + " axis needs a positive minimum for log spacing");
    }
  };
  check_axis(spec.radius, "radius");
  check_axis(spec.atoms, "atoms");
  if (!(spec.radius.min > 0.0)) throw ModelError(ErrorCode::invalid_parameter, "radius axis must be positive");
  if (spec.atoms.min < 0.0) throw ModelError(ErrorCode::invalid_parameter, "atom axis must be non-negative");
}

SweepRecord evaluate_cell(const SweepSpec& spec, double radius, double atoms) {
  SweepRecord rec;
  rec.radius = radius;
  rec.atoms = atoms;

  SystemConfig cfg = spec.base;
  cfg.sphere.radius = radius;
  cfg.atoms.count = atoms;
  cfg.atoms.cooling_rate.reset();
  cfg.atoms.cooling_to_coupling_ratio = spec.held.cooling_to_coupling_ratio;
  cfg.detuning = spec.held.detuning;
  cfg.mode = spec.held.mode;

  try {
    const Evaluation e = evaluate(cfg, spec.thresholds);
    rec.g = e.rates.g;
    rec.gamma_cool = e.rates.gamma_cool;
    rec.gamma_sc = e.rates.gamma_sc;
    rec.gamma_m_diff = e.rates.gamma_m_diff;
    rec.gamma_th = e.rates.gamma_th;
    rec.n_ss = e.steady.n_ss;
    rec.strong_coupling_ratio = e.steady.strong_coupling_ratio;
    rec.flags = e.steady.flags;
    if (!std::isfinite(rec.n_ss) || !std::isfinite(rec.strong_coupling_ratio)) {
      rec.error = ErrorCode::singular_configuration;
      rec.error_message = "non-finite result";
    }
  } catch (const ModelError& err) {
    rec.error = err.code();
    rec.error_message = err.what();
  }
  return rec;
}

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
  check_sweep_spec(spec);
  const auto radii = spec.radius.nodes();
  const auto atoms = spec.atoms.nodes();

  SweepResult result;
  result.radius_steps = radii.size();
  result.atom_steps = atoms.size();
  result.records.resize(radii.size() * atoms.size());

  const std::size_t total = result.records.size();
  auto work = [&](std::size_t idx) {
    result.records[idx] = evaluate_cell(spec, radii[idx / atoms.size()], atoms[idx % atoms.size()]);
  };

  if (threads <= 1) {
    for (std::size_t i = 0; i < total; ++i) work(i);
    return result;
  }

  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) work(i);
      });
    }
  }
  return result;
}

std::string flag_string(const RegimeFlags& f) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += '|';
    out += name;
  };
  add(f.ground_state, "ground_state");
  add(f.strong_coupling, "strong_coupling");
  add(f.adiabatic_ok, "adiabatic");
  add(f.weak_coupling_ok, "weak_coupling");
  add(f.bad_cavity, "bad_cavity");
  add(f.feedback_ground_state_feasible.value_or(false), "feedback_feasible");
  return out.empty() ? "none" : out;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << "a_nm,N_at,g_2pi_hz,Gamma_cool_2pi_hz,gamma_sc_2pi_hz,gamma_m_diff_2pi_hz,Gamma_th_2pi_hz,n_ss,sc_ratio,flags\n";
  for (const auto& r : result.records) {
    out << format_number(r.radius * 1e9) << ',' << format_number(r.atoms) << ',';
    if (!r.ok()) {
      out << ",,,,,,," << "error:" << to_string(*r.error) << '\n';
      continue;
    }
    out << format_number(r.g.hz()) << ',' << format_number(r.gamma_cool.hz()) << ','
        << format_number(r.gamma_sc.hz()) << ',' << format_number(r.gamma_m_diff.hz()) << ','
        << format_number(r.gamma_th.hz()) << ',' << format_number(r.n_ss) << ','
        << format_number(r.strong_coupling_ratio) << ',' << flag_string(r.flags) << '\n';
  }
}

SweepSummary summarize(const SweepResult& result) {
  SweepSummary s;
  std::size_t ok = 0, strong = 0, ground = 0;
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const auto& r = result.records[i];
    if (!r.ok()) {
      ++s.error_cells;
      continue;
    }
    ++ok;
    if (r.flags.strong_coupling) ++strong;
    if (r.flags.ground_state) ++ground;
    if (!s.min_n_ss_index || r.n_ss < result.records[*s.min_n_ss_index].n_ss) s.min_n_ss_index = i;
  }
  if (ok > 0) {
    s.strong_coupling_fraction = static_cast<double>(strong) / static_cast<double>(ok);
    s.ground_state_fraction = static_cast<double>(ground) / static_cast<double>(ok);
  }
  return s;
}

std::vector<FinesseRow> finesse_tradeoff(const SystemConfig& base, const std::vector<double>& finesse_values,
                                         const RegimeThresholds& thresholds) {
  std::vector<FinesseRow> rows;
  rows.reserve(finesse_values.size());
  for (double f : finesse_values) {
    if (!(f > 0.0)) throw ModelError(ErrorCode::invalid_parameter, "finesse values must be positive");
    FinesseRow row;
    row.finesse = f;
    SystemConfig cfg = base;
    cfg.cavity.finesse = f;
    try {
      const Evaluation e = evaluate(cfg, thresholds);
      row.g = e.rates.g;
      row.gamma_m_diff = e.rates.gamma_m_diff;
      row.n_ss = e.steady.n_ss;
    } catch (const ModelError& err) {
      row.error = err.code();
    }
    rows.push_back(row);
  }
  return rows;
}

void write_finesse_csv(const std::vector<FinesseRow>& rows, std::ostream& out) {
  out << "finesse,g_2pi_hz,gamma_m_diff_2pi_hz,n_ss\n";
  for (const auto& r : rows) {
    out << format_number(r.finesse) << ',';
    if (r.error) {
      out << ",,error:" << to_string(*r.error) << '\n';
      continue;
    }
    out << format_number(r.g.hz()) << ',' << format_number(r.gamma_m_diff.hz()) << ',' << format_number(r.n_ss)
        << '\n';
  }
}

}  // namespace symcool
