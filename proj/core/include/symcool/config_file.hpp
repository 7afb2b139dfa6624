#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symcool/system_model.hpp"

namespace symcool {

// One `key = value` line of a configuration file.
struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
};

struct ConfigDocument {
  std::vector<ConfigEntry> entries;  // file order
};

struct ConfigIssue {
  std::string key;  // empty for whole-config checks
  int line = 0;     // 0 when not tied to a line
  std::string message;

  std::string describe() const;
};

// Validation failure; carries every problem found, not just the first.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<ConfigIssue> issues);
  const std::vector<ConfigIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<ConfigIssue> issues_;
};

// File could not be opened or read.
class ConfigIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax only: '#' starts a comment, blank lines are skipped, every other
// line must be `key = value`. Duplicate keys are rejected.
ConfigDocument parse_config_text(std::string_view text);
ConfigDocument load_config_file(const std::filesystem::path& path);

// Resolves keys and values (unknown keys and malformed numbers are errors)
// and runs the model's invariant checks. Numbers are parsed with
// std::from_chars, so the decimal point is always '.'.
SystemConfig build_config(const ConfigDocument& doc);
SystemConfig load_system_config(const std::filesystem::path& path);

std::vector<std::string_view> known_keys();
bool is_known_key(std::string_view key);
bool is_numeric_key(std::string_view key);

// Value of a numeric key in the units its name states; nullopt when an
// optional key is unset. Throws std::invalid_argument for non-numeric keys.
std::optional<double> numeric_value(const SystemConfig& cfg, std::string_view key);
void set_numeric_value(SystemConfig& cfg, std::string_view key, double value);

// key = value pairs for every known key that has a value, in table order,
// using the file's text where the document supplied one.
std::vector<std::pair<std::string, std::string>> resolved_entries(const SystemConfig& cfg,
                                                                  const ConfigDocument* doc = nullptr);

}  // namespace symcool
