#include "degcs/phase.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "degcs/errors.hpp"
#include "degcs/quadrature.hpp"
#include "phase_kernels.hpp"

namespace degcs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Phasor recurrences are re-seeded from std::polar this often.
constexpr std::size_t kReseedEvery = 32;

double clamp_density(double v) { return v < 0.0 ? 0.0 : v; }

// |sum_n a_n e^{i n phi}|^2 over the active range (offset `first`).
double squared_modulus(const detail::ActiveAmplitudes& active, double phi) {
  const auto& a = active.amplitudes;
  const std::complex<double> step = std::polar(1.0, phi);
  std::complex<double> phasor;
  std::complex<double> sum;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i % kReseedEvery == 0) {
      phasor = std::polar(1.0, static_cast<double>(active.first + i) * phi);
    }
    sum += a[i] * phasor;
    phasor *= step;
  }
  return std::norm(sum);
}

}  // namespace

namespace detail {

ActiveAmplitudes active_amplitudes(const StateWeights& state) {
  const auto amps = state.amplitudes();
  const double peak = *std::max_element(amps.begin(), amps.end());
  const double floor = peak * kAmplitudeCutoff;
  std::size_t lo = 0;
  while (lo < amps.size() && amps[lo] < floor) ++lo;
  std::size_t hi = amps.size();
  while (hi > lo && amps[hi - 1] < floor) --hi;
  return {lo, std::vector<double>(amps.begin() + static_cast<std::ptrdiff_t>(lo),
                                  amps.begin() + static_cast<std::ptrdiff_t>(hi))};
}

std::vector<double> lag_sums(const ActiveAmplitudes& active, const DegenerateSpectrum& spectrum,
                             double gamma) {
  const auto& a = active.amplitudes;
  const std::size_t count = a.size();
  std::vector<double> lag(std::max<std::size_t>(count, 1), 0.0);
  for (std::size_t m = 1; m < count; ++m) {
    double sum = 0.0;
    for (std::size_t k = 0; k + m < count; ++k) {
      double term = a[k + m] * a[k];
      if (gamma != 0.0) {
        const double gap = spectrum.rho(active.first + k + m) - spectrum.rho(active.first + k);
        term *= std::cos(gap * gamma);
      }
      sum += term;
    }
    lag[m] = sum;
  }
  return lag;
}

std::vector<double> cosine_series_on_grid(std::span<const double> lag, double phase,
                                          const PhaseGrid& grid) {
  std::vector<double> values(grid.points);
  for (std::size_t j = 0; j < grid.points; ++j) {
    const double phi = grid.theta(j) - phase;
    const std::complex<double> step = std::polar(1.0, phi);
    std::complex<double> phasor;
    double sum = 0.0;
    for (std::size_t m = 1; m < lag.size(); ++m) {
      if ((m - 1) % kReseedEvery == 0) phasor = std::polar(1.0, static_cast<double>(m) * phi);
      sum += lag[m] * phasor.real();
      phasor *= step;
    }
    values[j] = clamp_density((1.0 + 2.0 * sum) / kTwoPi);
  }
  return values;
}

double variance_from_lags(std::span<const double> lag, double phase) {
  double sum = 0.0;
  for (std::size_t m = 1; m < lag.size(); ++m) {
    const auto dm = static_cast<double>(m);
    const double sign = m % 2 == 0 ? 1.0 : -1.0;
    sum += lag[m] * std::cos(dm * phase) * sign / (dm * dm);
  }
  return kPi * kPi / 3.0 + 4.0 * sum;
}

}  // namespace detail

void PhaseGrid::validate() const {
  if (points < 16 || points % 2 != 0) {
    throw std::invalid_argument("phase grid needs an even number of points >= 16");
  }
  if (!std::isfinite(theta0)) throw std::invalid_argument("theta0 must be finite");
}

PhaseDistribution phase_distribution(const StateWeights& state, const PhaseGrid& grid) {
  grid.validate();
  const auto active = detail::active_amplitudes(state);
  const double alpha = std::arg(state.z());
  PhaseDistribution out{grid, std::vector<double>(grid.points), 0.0};
  for (std::size_t j = 0; j < grid.points; ++j) {
    out.values[j] = clamp_density(squared_modulus(active, alpha - grid.theta(j)) / kTwoPi);
  }
  return out;
}

PhaseDistribution phase_distribution_double_sum(const StateWeights& state,
                                                const PhaseGrid& grid) {
  grid.validate();
  const auto active = detail::active_amplitudes(state);
  const auto lag = detail::lag_sums(active, state.spectrum(), 0.0);
  return {grid, detail::cosine_series_on_grid(lag, std::arg(state.z()), grid), 0.0};
}

double phase_density_at(const StateWeights& state, double theta) {
  const auto active = detail::active_amplitudes(state);
  return clamp_density(squared_modulus(active, std::arg(state.z()) - theta) / kTwoPi);
}

double distribution_integral(const PhaseDistribution& distribution) {
  return quadrature::trapezoid_periodic(distribution.values, distribution.grid.step());
}

double phase_variance_series(const StateWeights& state) {
  if (state.z().imag() != 0.0) {
    throw std::domain_error("phase variance series requires real z");
  }
  const auto active = detail::active_amplitudes(state);
  const auto lag = detail::lag_sums(active, state.spectrum(), 0.0);
  return detail::variance_from_lags(lag, std::arg(state.z()));
}

double phase_variance_quadrature(const PhaseDistribution& distribution) {
  const auto& grid = distribution.grid;
  const std::size_t m = grid.points;
  std::vector<double> first(m + 1);
  std::vector<double> second(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    const double theta = grid.theta(j);
    const double p = distribution.values[j % m];
    first[j] = theta * p;
    second[j] = theta * theta * p;
  }
  const double h = grid.step();
  const double mean = quadrature::simpson(first, h);
  return quadrature::simpson(second, h) - mean * mean;
}

double phase_variance(const StateWeights& state, const PhaseGrid& grid) {
  if (state.z().imag() == 0.0 && grid.is_symmetric_window()) {
    return phase_variance_series(state);
  }
  return phase_variance_quadrature(phase_distribution(state, grid));
}

double number_phase_commutator(const StateWeights& state, const PhaseGrid& grid) {
  return 1.0 - kTwoPi * phase_density_at(state, grid.theta0);
}

SqueezingReport squeezing_report(const StateWeights& state, const PhaseGrid& grid) {
  grid.validate();
  SqueezingReport report;
  report.commutator_magnitude = std::abs(number_phase_commutator(state, grid));
  if (report.commutator_magnitude < 1e-12) {
    throw DegenerateCommutator("number-phase commutator vanishes at |z| = " +
                               std::to_string(std::abs(state.z())));
  }
  report.number_variance = number_variance(state);
  report.phase_variance = phase_variance(state, grid);
  report.s_number = 2.0 * report.number_variance / report.commutator_magnitude - 1.0;
  report.s_phase = 2.0 * report.phase_variance / report.commutator_magnitude - 1.0;
  return report;
}

}  // namespace degcs
