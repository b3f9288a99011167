#pragma once

#include <array>
#include <utility>
#include <vector>

#include "aisw/eigensolver.hpp"
#include "aisw/tuner.hpp"
#include "aisw/well.hpp"

namespace support {

// Published step heights making states 1..9 zero-curvature at a = b = 3,
// hbar = 2m = 1; the seventh is printed one digit shorter at the source.
inline constexpr std::array<double, 9> kPublishedV0 = {
    0.457318, 2.682149, 7.073234,  13.654351, 22.427917,
    33.394444, 46.55409, 61.906917, 79.452954};

inline double published_v0_tol(int n) { return n == 7 ? 5e-5 : 1e-5; }

// Regression values computed by this library and frozen at 12 digits.
inline constexpr std::array<double, 9> kTunedV0 = {
    0.457317596188, 2.68214911449, 7.07323406116,
    13.6543513069,  22.4279175889, 33.3944443915,
    46.5540904624,  61.9069177382, 79.4529543678};

// First nine eigenvalues of the a = b = 3, v0 = 33 well, frozen the same way.
inline constexpr std::array<double, 9> kEnergies33 = {
    0.979097454158, 3.90958459667, 8.76798751672,
    15.5006861519,  23.9697188057, 33.2223314411,
    34.4978279703,  37.6228110566, 42.1870127962};

inline aisw::WellConfig well33() { return {3.0, 3.0, 33.0}; }

inline const std::vector<aisw::Eigenstate>& states33() {
  static const std::vector<aisw::Eigenstate> states =
      aisw::solve_spectrum(well33(), 9).states;
  return states;
}

// The nine tuned wells, each paired with its zero-curvature state n.
inline const std::vector<std::pair<aisw::WellConfig, aisw::Eigenstate>>&
tuned_states() {
  static const auto data = [] {
    std::vector<std::pair<aisw::WellConfig, aisw::Eigenstate>> out;
    for (int n = 1; n <= 9; ++n) {
      const aisw::WellConfig well{3.0, 3.0, aisw::tune_v0(3.0, 3.0, n).v0};
      out.emplace_back(well, aisw::solve_state(well, n));
    }
    return out;
  }();
  return data;
}

}  // namespace support
