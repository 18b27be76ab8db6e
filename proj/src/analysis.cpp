#include "gbd/analysis.hpp"

#include "gbd/errors.hpp"
#include "gbd/fit.hpp"
#include "gbd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gbd {

double modulus_of_continuity(const TestFunction& f, double delta, int grid_size) {
  if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("modulus of continuity needs 0 < delta <= 1");
  if (grid_size < 1000) throw DomainError("modulus of continuity needs grid_size >= 1000");

  const auto count = static_cast<std::size_t>(grid_size) + 1;
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = f(static_cast<double>(i) / grid_size);
  const auto window = static_cast<std::size_t>(std::floor(delta * grid_size * (1.0 + 1e-14)));
  double omega = window > 0 ? kernels::max_window_difference(values, window) : 0.0;

  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / grid_size;
    if (t + delta > 1.0) break;
    omega = std::max(omega, std::abs(f(t + delta) - values[i]));
  }
  return omega;
}

BoundCheck check_theorem1_bound(const AlphaSequences& alpha, const TestFunction& f, int n, int grid_points,
                                int modulus_grid) {
  if (grid_points < 2) throw DomainError("bound check needs at least two grid points");
  const OperatorSpec spec(Modified1{alpha}, n);
  const Approximant op(spec, f);
  std::vector<double> xs(static_cast<std::size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i) xs[static_cast<std::size_t>(i)] = static_cast<double>(i) / (grid_points - 1);
  const auto values = kernels::evaluate(op, xs);

  BoundCheck check;
  for (std::size_t i = 0; i < xs.size(); ++i) check.lhs = std::max(check.lhs, std::abs(values[i] - f(xs[i])));
  check.omega = modulus_of_continuity(f, 1.0 / std::sqrt(static_cast<double>(n)), modulus_grid);
  check.rhs = 2.0 * (3.0 * std::abs(alpha.alpha1(n)) + 1.0) * check.omega;
  check.holds = check.lhs <= check.rhs + 1e-9;
  return check;
}

VoronovskajaTarget voronovskaja_target(double l0, const TestFunction& f, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("Voronovskaja target outside [0,1]");
  const double value = (1.0 - 2.0 * x) * (1.0 - l0) * f.derivative(1, x) + x * (1.0 - x) * f.derivative(2, x);
  return {l0, x, value};
}

double voronovskaja_residual(const AlphaSequences& alpha, double l0, const TestFunction& f, double x, int n) {
  const auto target = voronovskaja_target(l0, f, x);
  const double approx = apply(OperatorSpec(Modified1{alpha}, n), f, x);
  return std::abs(n * (approx - f(x)) - target.value);
}

double voronovskaja_residual(const AlphaSequences& alpha, const TestFunction& f, double x, int n) {
  if (!alpha.alpha0_limit) throw std::invalid_argument("alpha sequences carry no limit for alpha0");
  return voronovskaja_residual(alpha, *alpha.alpha0_limit, f, x, n);
}

OrderFit fit_convergence_order(const Family& family, const TestFunction& f, double x, std::span<const int> n_values) {
  if (n_values.size() < 4) throw std::invalid_argument("order fit needs at least four values of n");
  for (std::size_t i = 1; i < n_values.size(); ++i)
    if (n_values[i] <= n_values[i - 1]) throw std::invalid_argument("order fit needs strictly increasing n");

  OrderFit fit;
  fit.family = kind_of(family);
  fit.function = f.name();
  fit.x = x;
  fit.n_values.assign(n_values.begin(), n_values.end());
  fit.errors.resize(n_values.size());
  for (std::size_t i = 0; i < n_values.size(); ++i)
    fit.errors[i] = std::abs(apply(OperatorSpec(family, n_values[i]), f, x) - f(x));

  std::vector<double> log_n, log_err;
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (!(fit.errors[i] >= order_fit_floor)) continue;
    fit.fitted_n.push_back(n_values[i]);
    log_n.push_back(std::log(static_cast<double>(n_values[i])));
    log_err.push_back(std::log(fit.errors[i]));
  }
  if (log_n.size() < 2)
    throw DegenerateFitError("order fit for " + f.name() + ": errors below " + std::to_string(order_fit_floor) +
                             " at almost every n");
  if (log_n.size() > order_fit_points) {
    const auto drop = static_cast<std::ptrdiff_t>(log_n.size() - order_fit_points);
    log_n.erase(log_n.begin(), log_n.begin() + drop);
    log_err.erase(log_err.begin(), log_err.begin() + drop);
    fit.fitted_n.erase(fit.fitted_n.begin(), fit.fitted_n.begin() + drop);
  }
  const auto line = least_squares_line(log_n, log_err);
  fit.slope = line.slope;
  fit.intercept = line.intercept;
  fit.r_squared = line.r_squared;
  return fit;
}

} // namespace gbd
