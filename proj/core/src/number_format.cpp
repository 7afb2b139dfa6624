#include "symcool/number_format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace symcool {

std::string format_number(double x) {
  if (x == 0.0) return "0";
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";

  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  const char* e = std::strchr(buf, 'e');
  const int exponent = std::atoi(e + 1);
  if (exponent >= 4 || exponent < -2) return buf;

  std::snprintf(buf, sizeof buf, "%.*f", 3 - exponent, x);
  return buf;
}

}  // namespace symcool
