#include "degcs/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "degcs/errors.hpp"

namespace degcs {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// ln(exp(a) + exp(b)) without overflow.
double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace

void TruncationPolicy::validate() const {
  if (!(tail_tolerance > 0.0)) throw std::invalid_argument("tail_tolerance must be > 0");
  if (max_levels < 2) throw std::invalid_argument("max_levels must be >= 2");
  if (consecutive_required < 1) throw std::invalid_argument("consecutive_required must be >= 1");
}

std::vector<double> StateWeights::amplitudes() const {
  std::vector<double> out(log_raw_.size());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = std::exp(0.5 * log_weight(n));
  }
  return out;
}

StateWeights make_state(const DegenerateSpectrum& spectrum, std::complex<double> z,
                        const TruncationPolicy& policy) {
  policy.validate();
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw NonFiniteInput("coherent amplitude z must be finite");
  }

  const std::size_t limit = std::min(spectrum.size(), policy.max_levels);
  const double log_x = std::log(std::norm(z));  // -inf at z = 0

  StateWeights state(spectrum, z);
  std::vector<double>& log_raw = state.log_raw_;
  log_raw.reserve(std::min<std::size_t>(limit, 256));

  double log_t = std::log(static_cast<double>(spectrum.degeneracy(0)));
  log_raw.push_back(log_t);
  double log_sum = log_t;
  double last_share = 0.0;
  std::size_t hits = 0;
  bool converged = false;

  for (std::size_t n = 1; n < limit; ++n) {
    log_t += log_x + std::log(static_cast<double>(spectrum.degeneracy(n))) -
             std::log(static_cast<double>(spectrum.degeneracy(n - 1))) - std::log(spectrum.rho(n));
    if (std::isnan(log_t)) log_t = kNegInf;
    log_raw.push_back(log_t);
    log_sum = log_add(log_sum, log_t);
    last_share = log_t == kNegInf ? 0.0 : std::exp(log_t - log_sum);
    hits = last_share < policy.tail_tolerance ? hits + 1 : 0;
    if (hits >= policy.consecutive_required) {
      converged = true;
      break;
    }
  }

  const bool exhausted_complete =
      policy.complete_spectrum && log_raw.size() == spectrum.size();
  if (!converged && !exhausted_complete && last_share > 1e3 * policy.tail_tolerance) {
    throw TruncationNotConverged(
        "series for " + spectrum.label() + " at |z| = " + std::to_string(std::abs(z)) +
        " not converged after " + std::to_string(log_raw.size()) +
        " levels (last term share " + std::to_string(last_share) +
        "); supply more levels or raise max_levels");
  }

  state.log_normalization_ = log_sum;
  state.weights_.resize(log_raw.size());
  for (std::size_t n = 0; n < log_raw.size(); ++n) {
    state.weights_[n] = std::exp(log_raw[n] - log_sum);
  }
  return state;
}

double mean_number(const StateWeights& state) {
  const auto w = state.weights();
  double sum = 0.0;
  for (std::size_t n = 1; n < w.size(); ++n) sum += static_cast<double>(n) * w[n];
  return sum;
}

double second_moment_number(const StateWeights& state) {
  const auto w = state.weights();
  double sum = 0.0;
  for (std::size_t n = 1; n < w.size(); ++n) {
    const auto dn = static_cast<double>(n);
    sum += dn * dn * w[n];
  }
  return sum;
}

double number_variance(const StateWeights& state) {
  const auto w = state.weights();
  const double mean = mean_number(state);
  double sum = 0.0;
  for (std::size_t n = 0; n < w.size(); ++n) {
    const double dev = static_cast<double>(n) - mean;
    sum += dev * dev * w[n];
  }
  return sum;
}

double mandel_q(const StateWeights& state) {
  const double mean = mean_number(state);
  if (mean == 0.0) return 0.0;
  return number_variance(state) / mean - 1.0;
}

LadderExpectations ladder_expectations(const StateWeights& state) {
  const auto& spectrum = state.spectrum();
  const auto w = state.weights();
  if (spectrum.size() <= w.size()) {
    throw SpectrumTooShort("ladder expectations need level " + std::to_string(w.size()) +
                           " but the spectrum has only " + std::to_string(spectrum.size()) +
                           " levels");
  }
  LadderExpectations out;
  for (std::size_t n = 0; n < w.size(); ++n) {
    if (w[n] == 0.0) continue;
    const auto d_n = static_cast<double>(spectrum.degeneracy(n));
    if (n > 0) {
      const auto d_prev = static_cast<double>(spectrum.degeneracy(n - 1));
      out.a_dag_a += w[n] * spectrum.rho(n) * d_prev / d_n;
    }
    const auto d_next = static_cast<double>(spectrum.degeneracy(n + 1));
    out.a_a_dag += w[n] * (d_n / d_next) * spectrum.rho(n + 1);
  }
  return out;
}

QuadratureReport quadrature_report(const StateWeights& state) {
  const auto ladder = ladder_expectations(state);
  const std::complex<double> z = state.z();
  const std::complex<double> a2 = z * z;
  const double symmetric = 0.5 * (ladder.a_a_dag + ladder.a_dag_a);

  QuadratureReport report;
  report.var_x = a2.real() + symmetric - 2.0 * z.real() * z.real();
  report.var_p = -a2.real() + symmetric - 2.0 * z.imag() * z.imag();
  report.commutator_expectation = ladder.a_a_dag - ladder.a_dag_a;

  const double half_comm = 0.5 * std::abs(report.commutator_expectation);
  const double mean = (report.var_x + report.var_p + half_comm) / 3.0;
  double dev = 0.0;
  for (double q : {report.var_x, report.var_p, half_comm}) {
    dev = std::max(dev, std::abs(q - mean));
  }
  report.max_relative_deviation = mean != 0.0 ? dev / std::abs(mean) : dev;
  return report;
}

}  // namespace degcs
