#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symcool/errors.hpp"
#include "symcool/steady_state.hpp"
#include "symcool/system_model.hpp"

namespace symcool {

struct GridAxis {
  double min = 0.0;
  double max = 0.0;
  std::size_t steps = 2;
  bool log_spacing = false;

  // Node values; the first and last nodes are exactly min and max.
  std::vector<double> nodes() const;
};

// Rules held fixed across every sweep cell.
struct HeldRules {
  double cooling_to_coupling_ratio = 1.1;  // gamma_at_cool = ratio * g in every cell
  AngularRate detuning{};
  DerivationMode mode = DerivationMode::frequency_anchored;

  static HeldRules from(const SystemConfig& cfg);
};

struct SweepSpec {
  GridAxis radius;  // m
  GridAxis atoms;   // count
  SystemConfig base;
  HeldRules held;
  RegimeThresholds thresholds;
};

struct SweepRecord {
  double radius = 0.0;
  double atoms = 0.0;
  std::optional<ErrorCode> error;
  std::string error_message;
  AngularRate g;
  AngularRate gamma_cool;
  AngularRate gamma_sc;
  AngularRate gamma_m_diff;
  AngularRate gamma_th;
  double n_ss = 0.0;
  double strong_coupling_ratio = 0.0;
  RegimeFlags flags;

  bool ok() const { return !error.has_value(); }
};

struct SweepResult {
  std::size_t radius_steps = 0;
  std::size_t atom_steps = 0;
  std::vector<SweepRecord> records;  // row-major: radius index, then atom index

  const SweepRecord& at(std::size_t radius_index, std::size_t atom_index) const {
    return records[radius_index * atom_steps + atom_index];
  }
};

// Throws ModelError(invalid_parameter) for degenerate axes.
void check_sweep_spec(const SweepSpec& spec);

// Cells are evaluated independently; `threads` > 1 spreads them over worker
// threads. Output is assembled by index, so it does not depend on threads.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 1);

// Evaluates one cell with the held rules applied on top of base.
SweepRecord evaluate_cell(const SweepSpec& spec, double radius, double atoms);

// "ground_state|strong_coupling|..." for the set flags, "none" otherwise.
std::string flag_string(const RegimeFlags& flags);

void write_sweep_csv(const SweepResult& result, std::ostream& out);

struct SweepSummary {
  std::optional<std::size_t> min_n_ss_index;
  double strong_coupling_fraction = 0.0;
  double ground_state_fraction = 0.0;
  std::size_t error_cells = 0;
};
SweepSummary summarize(const SweepResult& result);

struct FinesseRow {
  double finesse = 0.0;
  std::optional<ErrorCode> error;
  AngularRate g;
  AngularRate gamma_m_diff;
  double n_ss = 0.0;
};

// Sweeps cavity finesse with all geometry held fixed.
std::vector<FinesseRow> finesse_tradeoff(const SystemConfig& base, const std::vector<double>& finesse_values,
                                         const RegimeThresholds& thresholds = {});

void write_finesse_csv(const std::vector<FinesseRow>& rows, std::ostream& out);

}  // namespace symcool
