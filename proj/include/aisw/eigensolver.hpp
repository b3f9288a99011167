#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "aisw/well.hpp"

namespace aisw {

struct SolverOptions {
  // Zero-curvature tag width: |E - v0| <= regime_tol * max(1, v0).
  double regime_tol = 1e-9;
  // Scan start and bracket-refinement relative tolerance.
  double e_min = 1e-8;
  double rel_tol = 1e-13;
  // Hard cap on scan steps so a mis-posed search fails loudly instead of
  // spinning; generous for any physical n_max.
  long max_scan_steps = 5'000'000;
};

class solver_error : public std::runtime_error {
 public:
  solver_error(const std::string& what, double lo, double hi)
      : std::runtime_error(what), lo_(lo), hi_(hi) {}
  double interval_lo() const { return lo_; }
  double interval_hi() const { return hi_; }

 private:
  double lo_;
  double hi_;
};

struct Spectrum {
  WellConfig well;
  std::vector<Eigenstate> states;
};

// Pole-free characteristic function; its zeros are exactly the eigenvalues
// and it is continuous across E = v0:
//   E < v0:  sin(ka) cosh(kb) + k b cos(ka) sinh(kb)/(kb)
//   E = v0:  sin(ka) + k b cos(ka)
//   E > v0:  sin(ka) cos(qb) + k b cos(ka) sin(qb)/(qb)
double characteristic(double energy, const WellConfig& well);

Spectrum solve_spectrum(const WellConfig& well, int n_max,
                        const SolverOptions& options = {});
Eigenstate solve_state(const WellConfig& well, int n,
                       const SolverOptions& options = {});

}  // namespace aisw
