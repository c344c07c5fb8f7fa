#pragma once

// Generalized coherent states over a degenerate spectrum.
//
// The state is a superposition over levels with amplitudes z^n / sqrt([rho_n]!)
// on the unnormalized level vectors |n, d_n, eta_n> (squared norm d_n), so the
// probability of level n is
//
//   w_n = |z|^(2n) d_n / ([rho_n]! N(|z|^2)),   N = sum_n |z|^(2n) d_n / [rho_n]!
//
// with [rho_n]! = rho_n rho_(n-1) ... rho_1 and [rho_0]! = 1. The per-level
// phases eta_n never enter any observable below and are not represented.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "degcs/spectrum.hpp"

namespace degcs {

struct TruncationPolicy {
  std::size_t max_levels = 1024;
  double tail_tolerance = 1e-15;
  std::size_t consecutive_required = 5;
  /// The spectrum lists every level of a finite system, so running off its
  /// end is exact rather than a truncation.
  bool complete_spectrum = false;

  /// Throws std::invalid_argument unless tail_tolerance > 0, max_levels >= 2
  /// and consecutive_required >= 1.
  void validate() const;
};

/// Normalized level occupation of a coherent state. Immutable.
class StateWeights {
 public:
  std::complex<double> z() const noexcept { return z_; }
  const DegenerateSpectrum& spectrum() const noexcept { return spectrum_; }

  /// ln(|z|^(2n) d_n / [rho_n]!) for n < levels_used(); -inf when z == 0, n > 0.
  std::span<const double> log_raw() const noexcept { return log_raw_; }
  std::span<const double> weights() const noexcept { return weights_; }
  /// ln N(|z|^2).
  double log_normalization() const noexcept { return log_normalization_; }
  std::size_t levels_used() const noexcept { return weights_.size(); }

  /// ln w_n, finite or -inf.
  double log_weight(std::size_t n) const { return log_raw_[n] - log_normalization_; }

  /// |<n|z>| / sqrt(d_n) normalized amplitude magnitude sqrt(w_n), computed from
  /// the logarithm so it stays representable after w_n underflows.
  std::vector<double> amplitudes() const;

 private:
  friend StateWeights make_state(const DegenerateSpectrum&, std::complex<double>,
                                 const TruncationPolicy&);
  StateWeights(DegenerateSpectrum spectrum, std::complex<double> z)
      : spectrum_(std::move(spectrum)), z_(z) {}

  DegenerateSpectrum spectrum_;
  std::complex<double> z_;
  std::vector<double> log_raw_;
  std::vector<double> weights_;
  double log_normalization_ = 0.0;
};

/// Builds the truncated state. Terms follow the log recurrence
///   ln t_(n+1) = ln t_n + ln|z|^2 + ln d_(n+1) - ln d_n - ln rho_(n+1),
/// ln t_0 = ln d_0, and summation stops once the newest term's share of the
/// running sum stays below tail_tolerance for consecutive_required levels.
/// Throws TruncationNotConverged when the spectrum or max_levels runs out while
/// the last share exceeds 1e3 * tail_tolerance (exhausting a complete spectrum
/// is not an error), NonFiniteInput for NaN/inf z.
StateWeights make_state(const DegenerateSpectrum& spectrum, std::complex<double> z,
                        const TruncationPolicy& policy = {});

double mean_number(const StateWeights& state);
double second_moment_number(const StateWeights& state);
/// Central second moment; algebraically <N^2> - <N>^2.
double number_variance(const StateWeights& state);
/// Var(N)/<N> - 1, with the analytic limit 0 returned at z = 0.
double mandel_q(const StateWeights& state);

struct LadderExpectations {
  double a_dag_a = 0.0;  ///< <A^dag A>
  double a_a_dag = 0.0;  ///< <A A^dag>
};

/// Series expectations of the deformed ladder products, using
///   A |n> = sqrt(rho_n) |n-1>,   A^dag |n> = (d_n / d_(n+1)) sqrt(rho_(n+1)) |n+1>
/// on the unnormalized level vectors. Needs one level past the truncation.
/// Throws SpectrumTooShort otherwise.
LadderExpectations ladder_expectations(const StateWeights& state);

struct QuadratureReport {
  double var_x = 0.0;
  double var_p = 0.0;
  double commutator_expectation = 0.0;  ///< <[A, A^dag]>
  double max_relative_deviation = 0.0;
};

/// Variances of X = (A + A^dag)/sqrt(2) and P = (A - A^dag)/(i sqrt(2)).
/// <A> = z and <A^2> = z^2 come from the eigenstate property; the ladder
/// products come from the series, so the report checks that the state really
/// saturates (dX)^2 = (dP)^2 = |<[X, P]>| / 2. Throws SpectrumTooShort.
QuadratureReport quadrature_report(const StateWeights& state);

}  // namespace degcs
