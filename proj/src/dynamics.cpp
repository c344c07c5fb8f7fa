#include "degcs/dynamics.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "degcs/entropic.hpp"
#include "phase_kernels.hpp"

namespace degcs {

void EvolutionGrid::validate() const {
  if (!(gamma_max > gamma_min)) throw std::invalid_argument("gamma_max must exceed gamma_min");
  if (steps < 2) throw std::invalid_argument("evolution grid needs at least 2 steps");
}

PhaseDistribution gk_phase_distribution(const StateWeights& state, const PhaseGrid& grid,
                                        double gamma) {
  grid.validate();
  const auto active = detail::active_amplitudes(state);
  const auto lag = detail::lag_sums(active, state.spectrum(), gamma);
  return {grid, detail::cosine_series_on_grid(lag, std::arg(state.z()), grid), gamma};
}

double gk_phase_variance(const StateWeights& state, double gamma) {
  if (state.z().imag() != 0.0) {
    throw std::domain_error("phase variance series requires real z");
  }
  const auto active = detail::active_amplitudes(state);
  const auto lag = detail::lag_sums(active, state.spectrum(), gamma);
  return detail::variance_from_lags(lag, std::arg(state.z()));
}

double gk_phase_entropy(const StateWeights& state, const PhaseGrid& grid, double gamma) {
  return phase_entropy(gk_phase_distribution(state, grid, gamma));
}

std::vector<EntropicSample> gk_entropic_sum_sweep(const StateWeights& state,
                                                  const PhaseGrid& grid,
                                                  const EvolutionGrid& evolution) {
  evolution.validate();
  const double r_number = number_entropy(state);
  std::vector<EntropicSample> rows;
  rows.reserve(evolution.steps);
  for (std::size_t i = 0; i < evolution.steps; ++i) {
    const double gamma = evolution.gamma(i);
    const double r_phase = gk_phase_entropy(state, grid, gamma);
    rows.push_back({gamma, r_number, r_phase, r_number + r_phase});
  }
  return rows;
}

}  // namespace degcs
