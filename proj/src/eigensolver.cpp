#include "aisw/eigensolver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "aisw/numeric.hpp"
#include "aisw/rootfind.hpp"
#include "aisw/wavefunction.hpp"

namespace aisw {

double characteristic(double energy, const WellConfig& well) {
  if (!(energy > 0.0))
    throw std::domain_error("characteristic: energy must be positive");
  const double k = wavenumber_k(energy, well.constants);
  const double ka = k * well.a;
  const double kb = k * well.b;
  if (energy < well.v0) {
    const double kap_b = wavenumber_kappa(energy, well) * well.b;
    return std::sin(ka) * std::cosh(kap_b) + kb * std::cos(ka) * sinhc(kap_b);
  }
  if (energy > well.v0) {
    const double q_b = wavenumber_q(energy, well) * well.b;
    return std::sin(ka) * std::cos(q_b) + kb * std::cos(ka) * sinc(q_b);
  }
  return std::sin(ka) + kb * std::cos(ka);
}

namespace {

// The raw matching conditions, recovered from g by cofactor multiplication;
// rejects a root produced by cancellation rather than physics. Skipped where
// the cofactor itself vanishes. Branches on the exact
// sign of energy - v0 (not the tagging tolerance): the linear form is exact
// only at equality, while the evanescent/oscillatory forms hold arbitrarily
// close to it.
bool cofactor_condition_holds(double energy, const WellConfig& well) {
  const double k = wavenumber_k(energy, well.constants);
  const double ka = k * well.a;
  if (std::fabs(std::cos(ka)) < 1e-8) return true;
  const double tan_ka = std::tan(ka);
  if (energy == well.v0) {
    const double kb = k * well.b;
    return std::fabs(tan_ka + kb) <=
           1e-8 * (std::fabs(tan_ka) + std::fabs(kb) + 1.0);
  }
  if (energy < well.v0) {
    const double kap = wavenumber_kappa(energy, well);
    const double t1 = kap * tan_ka;
    const double t2 = k * std::tanh(kap * well.b);
    return std::fabs(t1 + t2) <= 1e-8 * (std::fabs(t1) + std::fabs(t2) + 1.0);
  }
  const double q = wavenumber_q(energy, well);
  if (std::fabs(std::cos(q * well.b)) < 1e-8) return true;
  const double t1 = q * tan_ka;
  const double t2 = k * std::tan(q * well.b);
  return std::fabs(t1 + t2) <= 1e-8 * (std::fabs(t1) + std::fabs(t2) + 1.0);
}

Eigenstate make_state(int n, double energy, const WellConfig& well,
                      double regime_tol_abs) {
  Eigenstate s;
  s.n = n;
  s.energy = energy;
  s.k = wavenumber_k(energy, well.constants);
  const double ka = s.k * well.a;
  s.amp_i = 1.0;
  if (std::fabs(energy - well.v0) <= regime_tol_abs) {
    s.regime = Regime::ZeroCurvature;
    s.secondary = 0.0;
    s.amp_ii = s.k * std::cos(ka);  // slope matching: A k cos(ka) = C
  } else if (energy < well.v0) {
    s.regime = Regime::Below;
    s.secondary = wavenumber_kappa(energy, well);
    s.amp_ii = -std::sin(ka) / std::sinh(s.secondary * well.b);
  } else {
    s.regime = Regime::Above;
    s.secondary = wavenumber_q(energy, well);
    const double qb = s.secondary * well.b;
    // Value matching, unless sin(qb) is the smaller pivot (it vanishes at
    // interior points of the Above family); the two agree at any root.
    if (std::fabs(std::sin(qb)) >= std::fabs(qb * std::cos(qb)))
      s.amp_ii = -std::sin(ka) / std::sin(qb);
    else
      s.amp_ii = s.k * std::cos(ka) / (s.secondary * std::cos(qb));
  }
  s.norm = normalization(s, well);
  return s;
}

// Rescans [lo, hi] at one-eighth step to expose sign changes hidden by a
// dip toward zero; recurses a bounded number of times on a nested dip.
template <class G>
void rescan_dip(G& g, double lo, double hi,
                std::vector<std::pair<double, double>>& brackets, int depth) {
  std::array<double, 9> e{}, v{};
  for (int i = 0; i <= 8; ++i) {
    e[i] = lo + (hi - lo) * i / 8.0;
    v[i] = g(e[i]);
  }
  for (int i = 0; i < 8; ++i)
    if (v[i] == 0.0 || (v[i] > 0) != (v[i + 1] > 0)) {
      brackets.emplace_back(e[i], e[i + 1]);
      return;
    }
  if (depth <= 0) return;
  for (int i = 1; i < 8; ++i)
    if (std::fabs(v[i]) <
        0.05 * std::min(std::fabs(v[i - 1]), std::fabs(v[i + 1]))) {
      rescan_dip(g, e[i - 1], e[i + 1], brackets, depth - 1);
      return;
    }
}

}  // namespace

Spectrum solve_spectrum(const WellConfig& well, int n_max,
                        const SolverOptions& options) {
  if (n_max < 1)
    throw std::invalid_argument("solve_spectrum: n_max must be at least 1");

  const double hbar = well.constants.hbar;
  const double mass = well.constants.mass;
  const double pi = std::acos(-1.0);
  const double isw_scale = (pi * hbar / (well.a + well.b)) *
                           (pi * hbar / (well.a + well.b)) / (2.0 * mass);
  const double step =
      well.v0 > 0.0 ? std::min(isw_scale, well.v0 / 50.0) : isw_scale;
  const double regime_tol_abs = options.regime_tol * std::fmax(1.0, well.v0);

  auto g = [&well](double e) { return characteristic(e, well); };

  Spectrum out{well, {}};
  out.states.reserve(static_cast<std::size_t>(n_max));

  double e0 = options.e_min;
  double g0 = g(e0);
  double prev_e = e0, prev_g = g0;
  bool have_prev = false;
  long steps = 0;

  while (static_cast<int>(out.states.size()) < n_max) {
    if (++steps > options.max_scan_steps)
      throw solver_error("solve_spectrum: scan budget exhausted",
                         options.e_min, e0);
    const double e1 = e0 + step;
    const double g1 = g(e1);

    std::vector<std::pair<double, double>> brackets;
    if (g0 == 0.0 || (g0 > 0) != (g1 > 0)) {
      brackets.emplace_back(e0, e1);
    } else if (have_prev &&
               std::fabs(g0) <
                   0.05 * std::min(std::fabs(prev_g), std::fabs(g1))) {
      rescan_dip(g, prev_e, e1, brackets, 2);
    }

    for (const auto& [lo, hi] : brackets) {
      const double f_lo = g(lo);
      const double f_hi = g(hi);
      double root;
      if (f_lo == 0.0) {
        root = lo;
      } else if (f_hi == 0.0) {
        root = hi;
      } else {
        root = refine_root(g, lo, hi, f_lo, f_hi, options.rel_tol);
      }
      if (!out.states.empty() &&
          root - out.states.back().energy <= 1e-9 * std::fmax(1.0, root))
        continue;  // same root seen again from an overlapping bracket
      if (!cofactor_condition_holds(root, well))
        throw solver_error("solve_spectrum: spurious zero rejected", lo, hi);
      out.states.push_back(make_state(static_cast<int>(out.states.size()) + 1,
                                      root, well, regime_tol_abs));
      if (static_cast<int>(out.states.size()) == n_max) break;
    }

    prev_e = e0;
    prev_g = g0;
    have_prev = true;
    e0 = e1;
    g0 = g1;
  }
  return out;
}

Eigenstate solve_state(const WellConfig& well, int n,
                       const SolverOptions& options) {
  if (n < 1) throw std::invalid_argument("solve_state: n must be at least 1");
  Spectrum spectrum = solve_spectrum(well, n, options);
  const Eigenstate& state = spectrum.states.back();
  const int nodes = node_count(state, well);
  if (nodes != n - 1)
    throw solver_error("solve_state: node count does not match the index",
                       state.energy, state.energy);
  return state;
}

}  // namespace aisw
