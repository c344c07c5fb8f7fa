#pragma once

// Gazeau-Klauder time evolution. The evolved state carries phases
// e^{-i rho_n gamma}; number statistics are unchanged while the phase
// distribution becomes
//
//   P(theta, gamma) = (1 / 2 pi)(1 + 2 sum_{k<n} sqrt(w_n w_k)
//                       cos[(n - k) theta] cos[(rho_n - rho_k) gamma])
//
// which is evaluated here as written (double sum grouped by lag). Evolving by
// a further time t maps gamma -> gamma + t.
//
// The associated ladder operators
//   A_GK = sqrt(H_(n+1)) e^{i (H_(n+1) - H_n) gamma} sum_n d_(n+1)^-1 |n><n+1|
// and their adjoint have the evolved state as right eigenstate; they are not
// needed by any observable here and are not implemented.

#include <cstddef>
#include <vector>

#include "degcs/phase.hpp"
#include "degcs/state.hpp"

namespace degcs {

struct EvolutionGrid {
  double gamma_min = 0.0;
  double gamma_max = 0.0;
  std::size_t steps = 2;

  /// gamma_max > gamma_min and steps >= 2. Throws std::invalid_argument.
  void validate() const;
  double gamma(std::size_t i) const noexcept {
    return gamma_min + (gamma_max - gamma_min) * static_cast<double>(i) /
                           static_cast<double>(steps - 1);
  }
};

PhaseDistribution gk_phase_distribution(const StateWeights& state, const PhaseGrid& grid,
                                        double gamma);

/// Variance series with the cos[(rho_n - rho_k) gamma] factor. Real z only
/// (std::domain_error otherwise); symmetric window assumed.
double gk_phase_variance(const StateWeights& state, double gamma);

double gk_phase_entropy(const StateWeights& state, const PhaseGrid& grid, double gamma);

struct EntropicSample {
  double gamma = 0.0;
  double r_number = 0.0;
  double r_phase = 0.0;
  double total = 0.0;
};

/// R_N once (gamma-independent), R_phi(gamma) per step.
std::vector<EntropicSample> gk_entropic_sum_sweep(const StateWeights& state,
                                                  const PhaseGrid& grid,
                                                  const EvolutionGrid& evolution);

}  // namespace degcs
