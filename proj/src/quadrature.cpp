#include "degcs/quadrature.hpp"

#include <stdexcept>

namespace degcs::quadrature {

double simpson(std::span<const double> nodes, double h) {
  const std::size_t count = nodes.size();
  if (count < 3 || count % 2 == 0) {
    throw std::invalid_argument("simpson needs an odd number (>= 3) of nodes");
  }
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t j = 1; j + 1 < count; ++j) {
    (j % 2 == 1 ? odd : even) += nodes[j];
  }
  return h / 3.0 * (nodes.front() + nodes.back() + 4.0 * odd + 2.0 * even);
}

double simpson_periodic(std::span<const double> samples, double h) {
  const std::size_t count = samples.size();
  if (count < 2 || count % 2 != 0) {
    throw std::invalid_argument("simpson_periodic needs an even number of samples");
  }
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t j = 1; j < count; ++j) {
    (j % 2 == 1 ? odd : even) += samples[j];
  }
  // f(x_M) = f(x_0): the two end weights merge into 2 f_0.
  return h / 3.0 * (2.0 * samples.front() + 4.0 * odd + 2.0 * even);
}

double trapezoid_periodic(std::span<const double> samples, double h) {
  double sum = 0.0;
  for (double v : samples) sum += v;
  return h * sum;
}

}  // namespace degcs::quadrature
