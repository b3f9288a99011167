#include "aisw/tuner.hpp"

#include <cmath>
#include <stdexcept>

#include "aisw/rootfind.hpp"

namespace aisw {

namespace {

double h_fn(double k, double a, double b) {
  return std::sin(k * a) + k * b * std::cos(k * a);
}

double h_prime(double k, double a, double b) {
  return (a + b) * std::cos(k * a) - k * a * b * std::sin(k * a);
}

}  // namespace

TuneResult tune_v0(double a, double b, int n, const Constants& c) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("tune_v0: widths must be positive");
  if (n < 1) throw std::invalid_argument("tune_v0: n must be at least 1");
  if (!(c.hbar > 0.0) || !(c.mass > 0.0))
    throw std::invalid_argument("tune_v0: hbar and mass must be positive");

  const double pi = std::acos(-1.0);
  // tan(ka) < 0 only on ((2n-1)pi/2, n pi) within the n-th period, and h
  // changes sign exactly once there; nudge off the endpoints where cos or
  // sin vanishes.
  const double lo = (2.0 * n - 1.0) * pi / (2.0 * a) + 1e-12;
  const double hi = n * pi / a - 1e-12;
  auto h = [a, b](double k) { return h_fn(k, a, b); };
  double k = refine_root(h, lo, hi, h(lo), h(hi), 1e-13);

  // Newton polish against the analytic derivative; keeps |h| near the
  // floating-point floor so downstream residual checks have headroom.
  for (int i = 0; i < 3; ++i) {
    const double hv = h_fn(k, a, b);
    const double hp = h_prime(k, a, b);
    if (hv == 0.0 || hp == 0.0) break;
    const double next = k - hv / hp;
    if (!(next > lo) || !(next < hi)) break;
    if (std::fabs(h_fn(next, a, b)) >= std::fabs(hv)) break;
    k = next;
  }

  TuneResult result;
  result.n = n;
  result.k = k;
  result.v0 = (c.hbar * k) * (c.hbar * k) / (2.0 * c.mass);
  result.residual = h_fn(k, a, b);
  return result;
}

std::vector<TuneResult> tune_all(double a, double b, int n_max,
                                 const Constants& c) {
  if (n_max < 1) throw std::invalid_argument("tune_all: n_max must be at least 1");
  std::vector<TuneResult> results;
  results.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) results.push_back(tune_v0(a, b, n, c));
  return results;
}

}  // namespace aisw
