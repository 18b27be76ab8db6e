#pragma once

#include "gbd/operators.hpp"
#include "gbd/test_function.hpp"

#include <span>
#include <string>
#include <vector>

namespace gbd {

inline constexpr int default_modulus_grid = 4096;

/// Lower approximation of the modulus of continuity
///   w(f; delta) = sup { |f(t) - f(s)| : |t - s| <= delta, t, s in [0,1] }.
/// Takes the larger of an exhaustive pair search over the grid i/grid_size
/// (window floor(delta * grid_size), nondecreasing in delta) and the pairs
/// (t_i, t_i + delta) at exactly distance delta.
/// Throws DomainError unless 0 < delta <= 1 and grid_size >= 1000.
double modulus_of_continuity(const TestFunction& f, double delta, int grid_size = default_modulus_grid);

struct BoundCheck {
  double lhs = 0.0;   // max over the grid of |U_n^1 f - f|
  double omega = 0.0; // w(f; 1/sqrt(n))
  double rhs = 0.0;   // 2 (3 |alpha1(n)| + 1) w(f; 1/sqrt(n))
  bool holds = false; // lhs <= rhs + 1e-9
};

/// Uniform error bound for the first-order modification on `grid_points`
/// equispaced points of [0,1].
BoundCheck check_theorem1_bound(const AlphaSequences& alpha, const TestFunction& f, int n, int grid_points = 401,
                                int modulus_grid = default_modulus_grid);

struct VoronovskajaTarget {
  double l0 = 0.0;
  double x = 0.0;
  double value = 0.0; // (1-2x)(1-l0) f'(x) + x(1-x) f''(x)
};

/// Needs f' and f'' (UnsupportedError otherwise).
VoronovskajaTarget voronovskaja_target(double l0, const TestFunction& f, double x);

/// |n (U_n^1(f;x) - f(x)) - target|, using alpha.alpha0_limit as l0 (throws
/// std::invalid_argument when the limit is not set).
double voronovskaja_residual(const AlphaSequences& alpha, const TestFunction& f, double x, int n);
double voronovskaja_residual(const AlphaSequences& alpha, double l0, const TestFunction& f, double x, int n);

struct OrderFit {
  FamilyKind family = FamilyKind::ClassicalGenuine;
  std::string function;
  double x = 0.0;
  std::vector<int> n_values;
  std::vector<double> errors; // |L_n f(x) - f(x)| for every n
  std::vector<int> fitted_n;  // the points that entered the fit
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

inline constexpr std::size_t order_fit_points = 5;
inline constexpr double order_fit_floor = 1e-15;

/// Least squares on (log n, log error) over the last five usable points;
/// errors below 1e-15 are dropped. Needs >= 4 strictly increasing n values.
/// Throws DegenerateFitError when fewer than two errors survive.
OrderFit fit_convergence_order(const Family& family, const TestFunction& f, double x, std::span<const int> n_values);

} // namespace gbd
