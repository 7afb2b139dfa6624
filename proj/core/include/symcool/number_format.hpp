#pragma once

#include <string>

namespace symcool {

// Four significant digits; scientific notation when |x| >= 1e4 or |x| < 1e-2
// (after rounding), fixed otherwise. Zero prints as "0".
std::string format_number(double x);

}  // namespace symcool
