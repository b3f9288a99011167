#pragma once

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace aisw {

namespace detail {

inline double qabs(double v) { return std::fabs(v); }
inline double qabs(const std::complex<double>& v) { return std::abs(v); }

template <class F, class T>
T simpson_step(F& f, double lo, double hi, T f_lo, T f_mid, T f_hi, T whole,
               double tol, int depth, int forced) {
  const double mid = 0.5 * (lo + hi);
  const double lq = 0.5 * (lo + mid);
  const double rq = 0.5 * (mid + hi);
  const T f_lq = f(lq);
  const T f_rq = f(rq);
  const double h6 = (hi - lo) / 12.0;
  const T left = h6 * (f_lo + 4.0 * f_lq + f_mid);
  const T right = h6 * (f_mid + 4.0 * f_rq + f_hi);
  const T delta = left + right - whole;
  if (depth <= 0 || (forced <= 0 && qabs(delta) <= 15.0 * tol))
    return left + right + delta / 15.0;  // Richardson tail of the halved rule
  return simpson_step(f, lo, mid, f_lo, f_lq, f_mid, left, 0.5 * tol,
                      depth - 1, forced - 1) +
         simpson_step(f, mid, hi, f_mid, f_rq, f_hi, right, 0.5 * tol,
                      depth - 1, forced - 1);
}

}  // namespace detail

// Adaptive Simpson with Richardson correction; abs_tol is an absolute target
// for the whole interval. Works for real and complex integrands. The first
// min_depth subdivisions are unconditional: an oscillatory integrand sampled
// near-commensurately with its period can alias the coarse error estimate to
// zero, so the estimate is not trusted until the panels are fine enough.
template <class F>
auto adaptive_simpson(F&& f, double lo, double hi, double abs_tol,
                      int max_depth = 48, int min_depth = 6)
    -> decltype(f(lo)) {
  using T = decltype(f(lo));
  if (lo == hi) return T{};
  const double mid = 0.5 * (lo + hi);
  const T f_lo = f(lo);
  const T f_mid = f(mid);
  const T f_hi = f(hi);
  const T whole = (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi);
  return detail::simpson_step(f, lo, hi, f_lo, f_mid, f_hi, whole, abs_tol,
                              max_depth, min_depth);
}

// Integrates across an ordered breakpoint list, one adaptive pass per panel,
// sharing abs_tol evenly. Used where the integrand has known kinks or spans
// several scales (e.g. the x = 0 matching point, momentum tail segments).
template <class F>
auto integrate_panels(F&& f, const std::vector<double>& points, double abs_tol)
    -> decltype(f(points.front())) {
  using T = decltype(f(points.front()));
  T sum{};
  if (points.size() < 2) return sum;
  const double tol = abs_tol / static_cast<double>(points.size() - 1);
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    sum += adaptive_simpson(f, points[i], points[i + 1], tol);
  return sum;
}

}  // namespace aisw
