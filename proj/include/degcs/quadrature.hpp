#pragma once

// Composite rules on uniform grids. A "periodic" sample set holds M values at
// x_0 + j h, j = 0..M-1, of a function with period M h; the endpoint x_0 + M h
// is implied equal to x_0.

#include <span>

namespace degcs::quadrature {

/// Composite Simpson over nodes.size() points (odd count, >= 3) spaced by h.
double simpson(std::span<const double> nodes, double h);

/// Simpson over one period with the periodic endpoint appended. M must be even.
double simpson_periodic(std::span<const double> samples, double h);

/// Trapezoid over one period (equal weights h).
double trapezoid_periodic(std::span<const double> samples, double h);

}  // namespace degcs::quadrature
