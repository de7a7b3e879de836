#include "spinlattice/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace spinlattice {

std::string format_number(double value, int significant_digits) {
  if (value == 0.0) value = 0.0;  // drops the sign of -0.0
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", significant_digits, value);
  return buffer;
}

double round_significant(double value, int significant_digits) {
  return std::strtod(format_number(value, significant_digits).c_str(), nullptr);
}

}  // namespace spinlattice
