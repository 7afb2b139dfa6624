#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "symcool/dynamics.hpp"
#include "symcool/pipeline.hpp"

namespace symcool {

struct ReportEntry {
  std::string key;
  std::variant<double, bool, std::string> value;
  std::string unit;       // text rendering only
  bool angular = false;   // value holds Hz and prints as "2π × x Hz"
};

struct ReportSection {
  std::string name;
  std::vector<ReportEntry> entries;
};

// Both renderings are produced from this one structure.
struct ReportDocument {
  std::vector<ReportSection> sections;
};

ReportDocument build_report(const Evaluation& e,
                            const std::vector<std::pair<std::string, std::string>>& config_echo);

std::string render_text(const ReportDocument& doc);
std::string render_json(const ReportDocument& doc);

// Occupation trace CSV: t_s,n_m,phase
void write_trace_csv(const SimulationTrace& trace, std::ostream& out);

// Normal-mode table as plain text.
std::string render_normal_modes(const NormalModes& modes);

}  // namespace symcool
