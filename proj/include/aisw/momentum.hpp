#pragma once

#include <complex>
#include <stdexcept>

#include "aisw/wavefunction.hpp"
#include "aisw/well.hpp"

namespace aisw {

class unsupported_regime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MomentumAmplitude {
  double p = 0.0;
  std::complex<double> phi_plus;
  std::complex<double> phi_minus;
  std::complex<double> phi_zero;
  std::complex<double> total;  // phi_plus + phi_minus + phi_zero
};

struct ComponentIntegrals {
  double i_plus = 0.0;    // A^2 a / 4
  double i_minus = 0.0;   // A^2 a / 4
  double i_zero = 0.0;    // A^2 b sin^2(ka) / 3
  double cross_pm = 0.0;  // -A^2 a sin(2ka) / (4ka)
  double cross_zero = 0.0;
};

struct PeakPartition {
  double left = 0.0;
  double center = 0.0;
  double right = 0.0;
};

// Closed-form momentum amplitudes of a zero-curvature state; removable
// singularities at p = -+hbar k (phi_plus/minus) and p = 0 (phi_zero) are
// filled by series. Throws unsupported_regime otherwise; the numeric oracle
// covers the other regimes.
MomentumAmplitude phi_components(const Eigenstate& state,
                                 const WellConfig& well, double p);

// Ground truth for any regime: adaptive quadrature of
// (1/sqrt(2 pi hbar)) Int psi(x) exp(-i p x / hbar) dx, split at x = 0.
std::complex<double> numeric_fourier_oracle(const Eigenstate& state,
                                            const WellConfig& well, double p,
                                            double abs_tol = 1e-10);

ComponentIntegrals component_integrals(const Eigenstate& state,
                                       const WellConfig& well);

// Quadrature counterparts of the five closed-form integrals over the
// truncated window [-P, P] with P = tail_cutoff(...).
ComponentIntegrals component_integrals_numeric(const Eigenstate& state,
                                               const WellConfig& well,
                                               double abs_tol = 1e-8);

// Truncation point: max(10 hbar k, 40 hbar / b) grown until the closed-form
// sinc/1-over-p^2 tail bound on the missing probability drops below 1e-4.
double tail_cutoff(const Eigenstate& state, const WellConfig& well);

// Masses of |phi_total|^2 over (-P, -hk/2], (-hk/2, +hk/2), [+hk/2, P).
PeakPartition peak_partition(const Eigenstate& state, const WellConfig& well);

// |phi(p)|^2 on a uniform grid over [-p_max, p_max]: closed form for
// zero-curvature states, the numeric oracle for the rest.
SampledDensity sample_momentum_density(const Eigenstate& state,
                                       const WellConfig& well, double p_max,
                                       int n_points);

}  // namespace aisw
