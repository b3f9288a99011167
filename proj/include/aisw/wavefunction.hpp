#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "aisw/well.hpp"

namespace aisw {

enum class Space { Position, Momentum };

struct SampledDensity {
  Space space = Space::Position;
  std::vector<double> abscissae;
  std::vector<double> values;
  int n = 0;
  double energy = 0.0;
  Regime regime = Regime::Below;
  double well_a = 0.0;
  double well_b = 0.0;
  double well_v0 = 0.0;
};

// Region-II probability mass of a zero-curvature state at unit normalization,
// amp being the Region-I coefficient. Shared verbatim between the position
// and momentum modules so their identity check compares like for like.
inline double zc_region2_mass(double amp, double ka, double b) {
  const double s = std::sin(ka);
  return amp * amp * b * s * s / 3.0;
}

// Normalized wavefunction value; x must lie in [-a, b].
double eval_psi(const Eigenstate& state, const WellConfig& well, double x);

// Constant making the matched segment pair square-integrate to one; ignores
// any normalization already stored on the state.
double normalization(const Eigenstate& state, const WellConfig& well);

// (P_I, P_II) from the closed-form segment integrals of the normalized state.
std::pair<double, double> region_probabilities(const Eigenstate& state,
                                               const WellConfig& well);

// Large-n limit of the zero-curvature region probabilities:
// (3a/(3a+2b), 2b/(3a+2b)).
std::pair<double, double> asymptotic_region_probabilities(double a, double b);

SampledDensity sample_density(const Eigenstate& state, const WellConfig& well,
                              int n_points);

// Interior sign changes of psi on (-a, b), counted on a uniform grid.
int node_count(const Eigenstate& state, const WellConfig& well,
               int grid_points = 4001);

}  // namespace aisw
