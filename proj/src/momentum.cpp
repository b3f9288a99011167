#include "aisw/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "aisw/numeric.hpp"
#include "aisw/quadrature.hpp"

namespace aisw {

namespace {

constexpr std::complex<double> kImag{0.0, 1.0};

void require_zero_curvature(const Eigenstate& state, const char* where) {
  if (state.regime != Regime::ZeroCurvature)
    throw unsupported_regime(std::string(where) +
                             ": closed forms exist only at E = V0");
}

// ((1 - cos x) - i (x - sin x)) / x^2 with the removable singularity at 0
// filled by its Taylor tail.
std::complex<double> ramp_kernel(double x) {
  if (std::fabs(x) < 1e-4) {
    const double x2 = x * x;
    return {0.5 - x2 / 24.0 + x2 * x2 / 720.0,
            -x / 6.0 + x * x2 / 120.0};
  }
  const double half = std::sin(0.5 * x);
  return std::complex<double>(2.0 * half * half, -(x - std::sin(x))) / (x * x);
}

std::vector<double> tail_panel_points(double inner, double cutoff) {
  std::vector<double> pos;
  double edge = std::min(inner, cutoff);
  pos.push_back(edge);
  while (edge < cutoff) {
    edge = std::min(2.0 * edge, cutoff);
    pos.push_back(edge);
  }
  std::vector<double> points;
  points.reserve(2 * pos.size() + 1);
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) points.push_back(-*it);
  points.push_back(0.0);
  points.insert(points.end(), pos.begin(), pos.end());
  return points;
}

double inner_window(const Eigenstate& state, const WellConfig& well) {
  const double hbar = well.constants.hbar;
  return 2.0 * hbar * state.k + 10.0 * hbar / well.b + 5.0;
}

}  // namespace

MomentumAmplitude phi_components(const Eigenstate& state,
                                 const WellConfig& well, double p) {
  require_zero_curvature(state, "phi_components");
  const double hbar = well.constants.hbar;
  const double a = well.a;
  const double ka = state.k * a;
  const double amp = state.norm * state.amp_i;
  const double pref = amp / std::sqrt(2.0 * std::numbers::pi * hbar);
  const double z_plus = (p + hbar * state.k) * a / (2.0 * hbar);
  const double z_minus = (p - hbar * state.k) * a / (2.0 * hbar);
  MomentumAmplitude out;
  out.p = p;
  out.phi_plus = pref * kImag * (a / 2.0) * std::polar(1.0, z_plus - ka) *
                 sinc(z_plus);
  out.phi_minus = -pref * kImag * (a / 2.0) * std::polar(1.0, z_minus + ka) *
                  sinc(z_minus);
  out.phi_zero =
      pref * well.b * std::sin(ka) * ramp_kernel(p * well.b / hbar);
  out.total = out.phi_plus + out.phi_minus + out.phi_zero;
  return out;
}

std::complex<double> numeric_fourier_oracle(const Eigenstate& state,
                                            const WellConfig& well, double p,
                                            double abs_tol) {
  const double hbar = well.constants.hbar;
  auto f = [&](double x) {
    return eval_psi(state, well, x) * std::polar(1.0, -p * x / hbar);
  };
  const std::vector<double> points{-well.a, 0.0, well.b};
  return integrate_panels(f, points, abs_tol) /
         std::sqrt(2.0 * std::numbers::pi * hbar);
}

ComponentIntegrals component_integrals(const Eigenstate& state,
                                       const WellConfig& well) {
  require_zero_curvature(state, "component_integrals");
  const double ka = state.k * well.a;
  const double amp = state.norm * state.amp_i;
  const double a2 = amp * amp;
  ComponentIntegrals out;
  out.i_plus = a2 * well.a / 4.0;
  out.i_minus = a2 * well.a / 4.0;
  // written exactly as the Region II position probability so the two
  // quantities agree to the last bit
  out.i_zero =
      state.norm * state.norm * zc_region2_mass(state.amp_i, ka, well.b);
  out.cross_pm = -a2 * (well.a / 2.0) * sinc(2.0 * ka);
  out.cross_zero = 0.0;
  return out;
}

double tail_cutoff(const Eigenstate& state, const WellConfig& well) {
  require_zero_curvature(state, "tail_cutoff");
  const double hbar = well.constants.hbar;
  const double hk = hbar * state.k;
  const double a = well.a;
  const double ka = state.k * a;
  const double amp = state.norm * state.amp_i;
  const double a2 = amp * amp;
  const double sin2 = std::sin(ka) * std::sin(ka);
  double cutoff = std::max(10.0 * hk, 40.0 * hbar / well.b);
  for (int i = 0; i < 200; ++i) {
    const double z_minus = (cutoff - hk) * a / (2.0 * hbar);
    const double z_plus = (cutoff + hk) * a / (2.0 * hbar);
    const double t_pm = a2 * a / (2.0 * std::numbers::pi) *
                        (1.0 / z_minus + 1.0 / z_plus);
    const double t_zero =
        4.0 * a2 * hbar * sin2 / (std::numbers::pi * cutoff);
    if (z_minus > 0.0 && 2.0 * (t_pm + t_zero) <= 1e-4) break;
    cutoff *= 1.25;
  }
  return cutoff;
}

ComponentIntegrals component_integrals_numeric(const Eigenstate& state,
                                               const WellConfig& well,
                                               double abs_tol) {
  require_zero_curvature(state, "component_integrals_numeric");
  const double cutoff = tail_cutoff(state, well);
  const std::vector<double> points =
      tail_panel_points(inner_window(state, well), cutoff);
  const auto phi = [&](double p) { return phi_components(state, well, p); };
  ComponentIntegrals out;
  out.i_plus = integrate_panels(
      [&](double p) { return std::norm(phi(p).phi_plus); }, points, abs_tol);
  out.i_minus = integrate_panels(
      [&](double p) { return std::norm(phi(p).phi_minus); }, points, abs_tol);
  out.i_zero = integrate_panels(
      [&](double p) { return std::norm(phi(p).phi_zero); }, points, abs_tol);
  out.cross_pm = integrate_panels(
      [&](double p) {
        const auto c = phi(p);
        return 2.0 * std::real(std::conj(c.phi_plus) * c.phi_minus);
      },
      points, abs_tol);
  out.cross_zero = integrate_panels(
      [&](double p) {
        const auto c = phi(p);
        return 2.0 * std::real(std::conj(c.phi_zero) *
                               (c.phi_plus + c.phi_minus));
      },
      points, abs_tol);
  return out;
}

PeakPartition peak_partition(const Eigenstate& state, const WellConfig& well) {
  require_zero_curvature(state, "peak_partition");
  const double hbar = well.constants.hbar;
  const double hk = hbar * state.k;
  const double cutoff = tail_cutoff(state, well);
  // |phi|^2 is even (psi is real), so sampling at |p| makes the mirrored
  // lobes agree to rounding instead of merely to quadrature tolerance
  const auto density = [&](double p) {
    return std::norm(phi_components(state, well, std::fabs(p)).total);
  };
  std::vector<double> right{hk / 2.0, hk};
  double edge = inner_window(state, well);
  while (edge < cutoff) {
    right.push_back(edge);
    edge *= 2.0;
  }
  right.push_back(cutoff);
  std::vector<double> left;
  left.reserve(right.size());
  for (auto it = right.rbegin(); it != right.rend(); ++it)
    left.push_back(-*it);
  PeakPartition out;
  out.left = integrate_panels(density, left, 1e-9);
  out.center = integrate_panels(
      density, std::vector<double>{-hk / 2.0, 0.0, hk / 2.0}, 1e-9);
  out.right = integrate_panels(density, right, 1e-9);
  return out;
}

SampledDensity sample_momentum_density(const Eigenstate& state,
                                       const WellConfig& well, double p_max,
                                       int n_points) {
  if (!(p_max > 0.0))
    throw std::invalid_argument("sample_momentum_density: p_max must be > 0");
  if (n_points < 2)
    throw std::invalid_argument(
        "sample_momentum_density: need at least two points");
  const bool closed = state.regime == Regime::ZeroCurvature;
  SampledDensity out;
  out.space = Space::Momentum;
  out.n = state.n;
  out.energy = state.energy;
  out.regime = state.regime;
  out.well_a = well.a;
  out.well_b = well.b;
  out.well_v0 = well.v0;
  out.abscissae.reserve(static_cast<std::size_t>(n_points));
  out.values.reserve(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    double p = i == 0            ? -p_max
               : i == n_points - 1 ? p_max
                                   : -p_max + 2.0 * p_max * i / (n_points - 1);
    const double dens =
        closed ? std::norm(phi_components(state, well, p).total)
               : std::norm(numeric_fourier_oracle(state, well, p, 1e-10));
    out.abscissae.push_back(p);
    out.values.push_back(dens);
  }
  return out;
}

}  // namespace aisw
