#pragma once

#include <span>

namespace gbd {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least-squares line through (x_i, y_i). Needs at least two points
/// with distinct x; throws std::invalid_argument otherwise.
LineFit least_squares_line(std::span<const double> xs, std::span<const double> ys);

} // namespace gbd
