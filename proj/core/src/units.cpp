#include "symcool/units.hpp"

#include <stdexcept>

namespace symcool {

double to_display_hz(AngularRate r) { return r.hz(); }

double torr_to_pascal(double torr) {
  if (!(torr >= 0.0)) {
    throw std::invalid_argument("pressure must be non-negative");
  }
  return torr * kPascalPerTorr;
}

}  // namespace symcool
