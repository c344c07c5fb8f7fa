#pragma once

// Number and phase Shannon entropies and the dimension-independent bound
// R_N + R_phi >= ln(2 pi).

#include "degcs/phase.hpp"
#include "degcs/state.hpp"

namespace degcs {

/// Terms with probability (or density) below this contribute exactly 0.
inline constexpr double kEntropyFloor = 1e-300;

struct EntropyReport {
  double r_number = 0.0;
  double r_phase = 0.0;
  double total = 0.0;
  double bound = 0.0;   ///< ln(2 pi)
  double margin = 0.0;  ///< total - bound
};

/// -sum w_n ln w_n, with ln w_n taken from the log-space weights.
double number_entropy(const StateWeights& state);

/// -int P ln P over the window by composite Simpson (periodic endpoint).
double phase_entropy(const PhaseDistribution& distribution);

/// Same integrand with the periodic trapezoid rule; used as a quadrature check.
double phase_entropy_trapezoid(const PhaseDistribution& distribution);

EntropyReport entropy_report(const StateWeights& state, const PhaseGrid& grid = {});

/// Assembles a report from already-computed entropies.
EntropyReport make_entropy_report(double r_number, double r_phase);

}  // namespace degcs
