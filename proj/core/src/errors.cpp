#include "symcool/errors.hpp"

namespace symcool {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::singular_configuration:
      return "singular-config";
    case ErrorCode::invalid_geometry:
      return "invalid-geometry";
    case ErrorCode::invalid_parameter:
      return "invalid-parameter";
    case ErrorCode::infeasible:
      return "infeasible";
  }
  return "unknown";
}

}  // namespace symcool
