#pragma once

#include <vector>

#include "aisw/constants.hpp"

namespace aisw {

struct TuneResult {
  double v0 = 0.0;
  double k = 0.0;        // sqrt(2m v0)/hbar, the root of the pole-free condition
  int n = 0;
  double residual = 0.0; // sin(ka) + k b cos(ka) at the returned k
};

// Inverse design: the step height v0 making the n-th eigenstate exactly
// zero-curvature. Solves sin(ka) + k b cos(ka) = 0 on the n-th branch,
// k in ((2n-1)pi/2a, n pi/a), where exactly one sign change lives.
TuneResult tune_v0(double a, double b, int n, const Constants& c = {});

std::vector<TuneResult> tune_all(double a, double b, int n_max,
                                 const Constants& c = {});

}  // namespace aisw
