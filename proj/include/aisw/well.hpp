#pragma once

#include <string>

#include "aisw/constants.hpp"

namespace aisw {

// Infinite walls at x = -a and x = +b, a constant step v0 on 0 < x < b.
// Region I is [-a, 0], Region II is [0, b].
struct WellConfig {
  double a;
  double b;
  double v0;
  Constants constants;

  WellConfig(double a_, double b_, double v0_, Constants c = {});

  // sqrt(2m|v0|)/hbar; defined alongside k/q/kappa but consumed by nothing
  // downstream, kept as a convenience accessor only.
  double chi() const;

  // Flat key-value record with keys a, b, v0, hbar, mass; values print with
  // shortest round-trip precision. from_kv requires a and b, defaults v0 = 0
  // and the standard constants, and ignores unrelated keys so the record can
  // share a file with command settings.
  std::string to_kv() const;
  static WellConfig from_kv(const std::string& text);
};

double wavenumber_k(double energy, const Constants& c);
double wavenumber_kappa(double energy, const WellConfig& well);
double wavenumber_q(double energy, const WellConfig& well);

enum class Regime { Below, Above, ZeroCurvature };

const char* to_string(Regime regime);

struct Eigenstate {
  int n = 0;
  double energy = 0.0;
  Regime regime = Regime::Below;
  double k = 0.0;          // Region-I wavenumber sqrt(2mE)/hbar
  double secondary = 0.0;  // kappa when Below, q when Above, 0 at zero curvature
  double amp_i = 1.0;      // Region-I coefficient A, pre-normalization (A > 0)
  double amp_ii = 0.0;     // Region-II coefficient C from matching, same scale
  double norm = 1.0;       // multiplies both amplitudes so that the state is normalized
};

}  // namespace aisw
