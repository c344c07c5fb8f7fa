#pragma once

// Shared evaluation kernels for the static and time-dependent phase
// distributions. Not part of the public interface.

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "degcs/phase.hpp"
#include "degcs/state.hpp"

namespace degcs::detail {

/// Levels whose amplitude sqrt(w_n) is at least this fraction of the largest
/// one; pairs outside contribute below double resolution.
inline constexpr double kAmplitudeCutoff = 1e-30;

struct ActiveAmplitudes {
  std::size_t first = 0;          ///< index of amplitudes[0] in the level list
  std::vector<double> amplitudes; ///< sqrt(w_n) over the active range
};

ActiveAmplitudes active_amplitudes(const StateWeights& state);

/// lag[m] = sum_k a_(k+m) a_k cos[(rho_(k+m) - rho_k) gamma], m = 1..L-1 (lag[0]
/// unused). gamma = 0 gives the plain autocorrelation.
std::vector<double> lag_sums(const ActiveAmplitudes& active, const DegenerateSpectrum& spectrum,
                             double gamma);

/// (1 / 2 pi)(1 + 2 sum_m lag[m] cos[m (theta_j - phase)]) on the grid.
std::vector<double> cosine_series_on_grid(std::span<const double> lag, double phase,
                                          const PhaseGrid& grid);

/// pi^2/3 + 4 sum_m lag[m] cos(m phase) (-1)^m / m^2.
double variance_from_lags(std::span<const double> lag, double phase);

}  // namespace degcs::detail
