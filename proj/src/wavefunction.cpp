#include "aisw/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

#include "aisw/numeric.hpp"

namespace aisw {

namespace {

// Closed-form segment masses of the unnormalized state (norm excluded).
// Region I integrates A^2 sin^2; Region II depends on the regime. The
// zero-curvature mass uses the sin^2(ka) form shared with the momentum
// module rather than C^2 b^3/3; the two agree at any root of the
// characteristic function.
std::pair<double, double> segment_masses(const Eigenstate& state,
                                         const WellConfig& well) {
  const double ka = state.k * well.a;
  const double mass_i =
      state.amp_i * state.amp_i * (well.a / 2.0) * (1.0 - sinc(2.0 * ka));
  double mass_ii = 0.0;
  switch (state.regime) {
    case Regime::Below: {
      const double kb = state.secondary * well.b;
      mass_ii = state.amp_ii * state.amp_ii * (well.b / 2.0) *
                (sinhc(2.0 * kb) - 1.0);
      break;
    }
    case Regime::Above: {
      const double qb = state.secondary * well.b;
      mass_ii = state.amp_ii * state.amp_ii * (well.b / 2.0) *
                (1.0 - sinc(2.0 * qb));
      break;
    }
    case Regime::ZeroCurvature:
      mass_ii = zc_region2_mass(state.amp_i, ka, well.b);
      break;
  }
  return {mass_i, mass_ii};
}

}  // namespace

double eval_psi(const Eigenstate& state, const WellConfig& well, double x) {
  if (x < -well.a || x > well.b)
    throw std::domain_error("eval_psi: x outside [-a, b]");
  if (x <= 0.0)
    return state.norm * state.amp_i * std::sin(state.k * (x + well.a));
  const double u = x - well.b;
  switch (state.regime) {
    case Regime::Below:
      return state.norm * state.amp_ii * std::sinh(state.secondary * u);
    case Regime::Above:
      return state.norm * state.amp_ii * std::sin(state.secondary * u);
    case Regime::ZeroCurvature:
      return state.norm * state.amp_ii * u;
  }
  return 0.0;
}

double normalization(const Eigenstate& state, const WellConfig& well) {
  const auto [mass_i, mass_ii] = segment_masses(state, well);
  return 1.0 / std::sqrt(mass_i + mass_ii);
}

std::pair<double, double> region_probabilities(const Eigenstate& state,
                                               const WellConfig& well) {
  const auto [mass_i, mass_ii] = segment_masses(state, well);
  const double n2 = state.norm * state.norm;
  return {n2 * mass_i, n2 * mass_ii};
}

std::pair<double, double> asymptotic_region_probabilities(double a, double b) {
  if (!(a > 0.0) || !(b >= 0.0))
    throw std::invalid_argument(
        "asymptotic_region_probabilities: bad region widths");
  return {3.0 * a / (3.0 * a + 2.0 * b), 2.0 * b / (3.0 * a + 2.0 * b)};
}

SampledDensity sample_density(const Eigenstate& state, const WellConfig& well,
                              int n_points) {
  if (n_points < 2)
    throw std::invalid_argument("sample_density: need at least two points");
  SampledDensity out;
  out.space = Space::Position;
  out.n = state.n;
  out.energy = state.energy;
  out.regime = state.regime;
  out.well_a = well.a;
  out.well_b = well.b;
  out.well_v0 = well.v0;
  out.abscissae.reserve(static_cast<std::size_t>(n_points));
  out.values.reserve(static_cast<std::size_t>(n_points));
  const double span = well.a + well.b;
  for (int i = 0; i < n_points; ++i) {
    // pin the walls exactly so rounding cannot push x outside the domain
    double x = i == 0            ? -well.a
               : i == n_points - 1 ? well.b
                                   : -well.a + span * i / (n_points - 1);
    const double psi = eval_psi(state, well, x);
    out.abscissae.push_back(x);
    out.values.push_back(psi * psi);
  }
  return out;
}

int node_count(const Eigenstate& state, const WellConfig& well,
               int grid_points) {
  if (grid_points < 3)
    throw std::invalid_argument("node_count: need at least three points");
  const double span = well.a + well.b;
  int count = 0;
  int last_sign = 0;
  for (int i = 1; i < grid_points - 1; ++i) {
    const double x = -well.a + span * i / (grid_points - 1);
    const double psi = eval_psi(state, well, x);
    const int sign = psi > 0.0 ? 1 : (psi < 0.0 ? -1 : 0);
    if (sign == 0) continue;
    if (last_sign != 0 && sign != last_sign) ++count;
    last_sign = sign;
  }
  return count;
}

}  // namespace aisw
