#include "degcs/entropic.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "degcs/quadrature.hpp"

namespace degcs {

namespace {

std::vector<double> entropy_density(const PhaseDistribution& distribution) {
  std::vector<double> integrand(distribution.values.size());
  for (std::size_t j = 0; j < integrand.size(); ++j) {
    const double p = distribution.values[j];
    integrand[j] = p < kEntropyFloor ? 0.0 : -p * std::log(p);
  }
  return integrand;
}

}  // namespace

double number_entropy(const StateWeights& state) {
  const auto w = state.weights();
  double sum = 0.0;
  for (std::size_t n = 0; n < w.size(); ++n) {
    if (w[n] < kEntropyFloor) continue;
    sum -= w[n] * state.log_weight(n);
  }
  return sum;
}

double phase_entropy(const PhaseDistribution& distribution) {
  return quadrature::simpson_periodic(entropy_density(distribution), distribution.grid.step());
}

double phase_entropy_trapezoid(const PhaseDistribution& distribution) {
  return quadrature::trapezoid_periodic(entropy_density(distribution), distribution.grid.step());
}

EntropyReport make_entropy_report(double r_number, double r_phase) {
  EntropyReport report;
  report.r_number = r_number;
  report.r_phase = r_phase;
  report.total = r_number + r_phase;
  report.bound = std::log(2.0 * std::numbers::pi);
  report.margin = report.total - report.bound;
  return report;
}

EntropyReport entropy_report(const StateWeights& state, const PhaseGrid& grid) {
  return make_entropy_report(number_entropy(state),
                             phase_entropy(phase_distribution(state, grid)));
}

}  // namespace degcs
