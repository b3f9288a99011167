#pragma once

namespace aisw {

// Default is hbar = 1, 2m = 1 so the documented parameter sets reproduce
// published figure values without unit conversions.
struct Constants {
  double hbar = 1.0;
  double mass = 0.5;
};

}  // namespace aisw
