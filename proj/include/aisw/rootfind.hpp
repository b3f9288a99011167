#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace aisw {

// Refines a bracketed root of f: bisection until the bracket width falls
// below rel_tol * max(1, |x|), then a few secant steps confined to the
// bracket to polish the last digits. Requires f(lo) and f(hi) of opposite
// sign (either endpoint may be an exact zero).
template <class F>
double refine_root(F&& f, double lo, double hi, double f_lo, double f_hi,
                   double rel_tol = 1e-13) {
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (!(lo < hi) || (f_lo > 0) == (f_hi > 0))
    throw std::invalid_argument("refine_root: endpoints do not bracket a root");

  while (hi - lo > rel_tol * std::fmax(1.0, std::fabs(lo) + std::fabs(hi))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0) == (f_lo > 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }

  double best = std::fabs(f_lo) <= std::fabs(f_hi) ? lo : hi;
  double f_best = std::fabs(f_lo) <= std::fabs(f_hi) ? f_lo : f_hi;
  double x0 = lo, y0 = f_lo, x1 = hi, y1 = f_hi;
  for (int i = 0; i < 8 && y1 != y0; ++i) {
    const double x2 = x1 - y1 * (x1 - x0) / (y1 - y0);
    if (!(x2 > lo) || !(x2 < hi)) break;
    const double y2 = f(x2);
    if (std::fabs(y2) < std::fabs(f_best)) {
      best = x2;
      f_best = y2;
    }
    if (y2 == 0.0) break;
    x0 = x1;
    y0 = y1;
    x1 = x2;
    y1 = y2;
  }
  return best;
}

}  // namespace aisw
