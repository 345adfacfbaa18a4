#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace walg {

// Half-integers are stored doubled so every coordinate and exponent stays an
// exact int.  A value h represents h/2.
using Half = int;

inline std::string half_str(Half h) {
  if (h % 2 == 0) return std::to_string(h / 2);
  return std::to_string(h) + "/2";
}

// Decimal rendering for pyramid column labels (matches "4.5"-style labels).
inline std::string half_str_decimal(Half h) {
  if (h % 2 == 0) return std::to_string(h / 2);
  return std::to_string(h / 2) + ".5";
}

inline Half half_from_int(int n) { return 2 * n; }

inline int half_to_int(Half h) {
  if (h % 2 != 0) throw std::invalid_argument("half_to_int: value " + half_str(h) + " is not an integer");
  return h / 2;
}

}  // namespace walg
