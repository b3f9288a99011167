#pragma once

#include <cmath>

namespace aisw {

// sin(x)/x and sinh(x)/x with series fill-in below |x| = 1e-4, where the
// direct quotient starts losing digits to cancellation in the numerator.
inline double sinc(double x) {
  if (std::fabs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

inline double sinhc(double x) {
  if (std::fabs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sinh(x) / x;
}

}  // namespace aisw
