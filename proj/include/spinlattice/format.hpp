#pragma once

#include <string>

namespace spinlattice {

inline constexpr int kDefaultSignificantDigits = 12;

// "%.{digits}g" with negative zero printed as "0".
std::string format_number(double value, int significant_digits = kDefaultSignificantDigits);

// Rounds through the decimal representation above, so serializers that print
// shortest round-trip forms emit the same digits.
double round_significant(double value, int significant_digits = kDefaultSignificantDigits);

}  // namespace spinlattice
