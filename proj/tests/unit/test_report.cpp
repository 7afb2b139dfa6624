#include <gtest/gtest.h>

#include <json.hpp>
#include <map>
#include <sstream>

#include "fixtures.hpp"
#include "symcool/config_file.hpp"
#include "symcool/number_format.hpp"
#include "symcool/report.hpp"

using namespace symcool;
using symcool::testing::reference_config;

namespace {

ReportDocument report_for(const SystemConfig& cfg) { return build_report(evaluate(cfg), resolved_entries(cfg)); }

// section.key -> printed value from the text rendering
std::map<std::string, std::string> parse_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line, section;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '[') {
      section = line.substr(1, line.size() - 2);
      continue;
    }
    const auto key_end = line.find(' ', 2);
    const auto value_start = line.find_first_not_of(' ', key_end);
    out[section + "." + line.substr(2, key_end - 2)] = line.substr(value_start);
  }
  return out;
}

}  // namespace

TEST(NumberFormat, FourSignificantDigits) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(5997.0), "5997");
  EXPECT_EQ(format_number(0.394581), "0.3946");
  EXPECT_EQ(format_number(0.01), "0.01000");
  EXPECT_EQ(format_number(0.00999), "9.990e-03");
  EXPECT_EQ(format_number(9999.4), "9999");
  EXPECT_EQ(format_number(9999.6), "1.000e+04");
  EXPECT_EQ(format_number(7.5e6), "7.500e+06");
  EXPECT_EQ(format_number(-2.5), "-2.500");
  EXPECT_EQ(format_number(2.4487e-12), "2.449e-12");
}

TEST(Report, TextAndJsonAgree) {
  for (double radius : {symcool::testing::kRadius300nmBead, symcool::testing::kRadius100nmBead}) {
    auto cfg = reference_config(radius);
    cfg.feedback.intracavity_photons = 1e8;
    const auto doc = report_for(cfg);
    const auto text = parse_text(render_text(doc));
    const auto json = nlohmann::json::parse(render_json(doc));
    std::size_t checked = 0;
    for (const auto& sec : doc.sections) {
      ASSERT_TRUE(json.contains(sec.name));
      for (const auto& e : sec.entries) {
        const auto& jv = json.at(sec.name).at(e.key);
        const auto& tv = text.at(sec.name + "." + e.key);
        if (std::holds_alternative<double>(e.value)) {
          const std::string shown = format_number(jv.get<double>());
          EXPECT_EQ(tv, e.angular ? "2π × " + shown + " Hz" : (e.unit.empty() ? shown : shown + " " + e.unit))
              << e.key;
          ++checked;
        } else if (std::holds_alternative<bool>(e.value)) {
          EXPECT_EQ(tv, jv.get<bool>() ? "true" : "false");
        } else {
          EXPECT_EQ(tv, jv.get<std::string>());
        }
      }
    }
    EXPECT_GT(checked, 40u);
  }
}

TEST(Report, ContainsReferenceRows) {
  const auto json = nlohmann::json::parse(render_json(report_for(reference_config())));
  EXPECT_NEAR(json["rates"]["g_2pi_hz"].get<double>(), 5.9e3, 0.05 * 5.9e3);
  EXPECT_NEAR(json["derived"]["kappa_2pi_hz"].get<double>(), 7.5e6, 0.01 * 7.5e6);
  EXPECT_NEAR(json["steady_state"]["n_ss"].get<double>(), 0.41, 0.05);
  EXPECT_EQ(json["provenance"]["mode"], "frequency-anchored");
  EXPECT_EQ(json["config"]["sphere.radius_nm"], "150");
  const auto text = render_text(report_for(reference_config()));
  EXPECT_NE(text.find("  g_2pi_hz                           2π × 5997 Hz\n"), std::string::npos);
}

TEST(Report, Deterministic) {
  const auto cfg = reference_config();
  EXPECT_EQ(render_text(report_for(cfg)), render_text(report_for(cfg)));
  EXPECT_EQ(render_json(report_for(cfg)), render_json(report_for(cfg)));
}

TEST(Report, EmptyEnsemble) {
  auto cfg = reference_config();
  cfg.atoms.count = 0.0;
  const auto e = evaluate(cfg);
  const auto json = nlohmann::json::parse(render_json(build_report(e, resolved_entries(cfg))));
  EXPECT_EQ(json["rates"]["g_2pi_hz"].get<double>(), 0.0);
  EXPECT_EQ(json["steady_state"]["term_atom_cooling_limit"].get<double>(), 0.0);
  EXPECT_EQ(json["steady_state"]["n_ss"].get<double>(), e.steady.term_cooling_balance);
  EXPECT_FALSE(json["steady_state"]["ground_state"].get<bool>());
}

TEST(Report, NonFiniteValuesStayValidJson) {
  ReportDocument doc{{{"s", {{"x", INFINITY, "", false}}}}};
  const auto json = nlohmann::json::parse(render_json(doc));
  EXPECT_EQ(json["s"]["x"], "inf");
}

TEST(TraceCsv, Format) {
  SimulationTrace t;
  t.samples = {{0.0, 1.389e8, CoolingPhase::cooling_on}, {1e-5, 0.5, CoolingPhase::cooling_off}};
  std::ostringstream os;
  write_trace_csv(t, os);
  EXPECT_EQ(os.str(), "t_s,n_m,phase\n0,138900000,cooling-on\n1e-05,0.5,cooling-off\n");
}

TEST(NormalModesText, Listing) {
  const auto m = normal_modes(AngularRate::from_hz(45e3), AngularRate::from_hz(45e3), AngularRate::from_hz(1.1e3),
                              AngularRate{}, AngularRate{});
  const auto text = render_normal_modes(m);
  EXPECT_NE(text.find("splitting 2π × 2200 Hz, resolved: yes"), std::string::npos);
}
