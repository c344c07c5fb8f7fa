#pragma once

// Pegg-Barnett phase statistics of degenerate coherent states in the
// infinite-dimensional limit:
//
//   P(theta) = |sum_n sqrt(w_n) e^{i n (arg z - theta)}|^2 / (2 pi)
//            = (1 / 2 pi) (1 + 2 sum_{k<n} sqrt(w_n w_k) cos[(n - k)(theta - arg z)])
//
// The first form is the production path; the expanded double sum is kept as
// an independent evaluation.

#include <cstddef>
#include <numbers>
#include <vector>

#include "degcs/state.hpp"

namespace degcs {

struct PhaseGrid {
  double theta0 = -std::numbers::pi;
  std::size_t points = 4096;

  /// points >= 16 and even. Throws std::invalid_argument.
  void validate() const;
  double step() const noexcept { return 2.0 * std::numbers::pi / static_cast<double>(points); }
  double theta(std::size_t j) const noexcept { return theta0 + step() * static_cast<double>(j); }
  /// The closed-form variance series is only valid on the window centered at 0.
  bool is_symmetric_window() const noexcept { return theta0 == -std::numbers::pi; }
};

struct PhaseDistribution {
  PhaseGrid grid;
  std::vector<double> values;  ///< P at grid.theta(j), clamped at 0
  double gamma = 0.0;          ///< evolution parameter, 0 for static states
};

/// Squared-modulus evaluation, O(levels * points).
PhaseDistribution phase_distribution(const StateWeights& state, const PhaseGrid& grid = {});

/// Expanded double-sum evaluation, organized by index lag n - k.
PhaseDistribution phase_distribution_double_sum(const StateWeights& state,
                                                const PhaseGrid& grid = {});

/// P at a single angle (squared-modulus form).
double phase_density_at(const StateWeights& state, double theta);

/// Trapezoid integral of the sampled density over its window (should be 1).
double distribution_integral(const PhaseDistribution& distribution);

/// pi^2/3 + 4 sum_{k<n} sqrt(w_n w_k) cos[(n-k) arg z] (-1)^(n-k) / (n-k)^2,
/// the variance on the window [-pi, pi). Real z only: throws
/// std::domain_error for Im z != 0.
double phase_variance_series(const StateWeights& state);

/// int theta^2 P - (int theta P)^2 over the distribution's window, composite
/// Simpson with the periodic endpoint appended.
double phase_variance_quadrature(const PhaseDistribution& distribution);

/// Series when z is real and the window is symmetric, quadrature otherwise.
double phase_variance(const StateWeights& state, const PhaseGrid& grid = {});

/// Imaginary part of <[N, phi]>: 1 - 2 pi P(theta0).
double number_phase_commutator(const StateWeights& state, const PhaseGrid& grid = {});

struct SqueezingReport {
  double s_number = 0.0;
  double s_phase = 0.0;
  double commutator_magnitude = 0.0;
  double phase_variance = 0.0;
  double number_variance = 0.0;
};

/// S_N = 2 Var(N)/|<[N, phi]>| - 1 and S_phi = 2 Var(phi)/|<[N, phi]>| - 1;
/// negative values flag squeezing. Throws DegenerateCommutator when the
/// commutator magnitude is below 1e-12 (the vacuum, z = 0).
SqueezingReport squeezing_report(const StateWeights& state, const PhaseGrid& grid = {});

}  // namespace degcs
