#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symcool {

enum class ErrorCode {
  singular_configuration,
  invalid_geometry,
  invalid_parameter,
  infeasible,
};

std::string_view to_string(ErrorCode code);

// Raised by model evaluation when a configuration cannot be evaluated.
class ModelError : public std::runtime_error {
 public:
  ModelError(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace symcool
