#include <cstdio>
#include <ostream>

#include "symcool/report.hpp"

namespace symcool {

namespace {

// Traces hold thousands of closely spaced samples; four digits would merge them.
std::string trace_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

void write_trace_csv(const SimulationTrace& trace, std::ostream& out) {
  out << "t_s,n_m,phase\n";
  for (const auto& s : trace.samples) {
    out << trace_number(s.time) << ',' << trace_number(s.occupation) << ',' << to_string(s.phase) << '\n';
  }
}

}  // namespace symcool
