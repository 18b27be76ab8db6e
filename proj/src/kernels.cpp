#include "gbd/kernels.hpp"

#include "gbd/basis.hpp"
#include "gbd/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <omp.h>

namespace gbd::kernels {

namespace {

constexpr std::size_t node_chunk = 32;

std::vector<double> exact_polynomial_integrals(int m, const TestFunction& f) {
  std::vector<double> out(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j)
    out[static_cast<std::size_t>(j)] = to_double(integrate_against_basis_exact(m, j, f.exact_polynomial()));
  return out;
}

void require_degree(int m) {
  if (m < 0) throw DomainError("negative basis degree: " + std::to_string(m));
}

} // namespace

int thread_count() { return omp_get_max_threads(); }

std::vector<double> basis_integrals_serial(const QuadraturePlan& plan, int m, const TestFunction& f) {
  require_degree(m);
  if (f.is_polynomial()) return exact_polynomial_integrals(m, f);
  const std::size_t width = static_cast<std::size_t>(m) + 1;
  std::vector<double> out(width, 0.0);
  std::vector<double> acc(width);
  for (std::size_t lo = 0; lo < plan.nodes.size(); lo += node_chunk) {
    std::fill(acc.begin(), acc.end(), 0.0);
    const std::size_t hi = std::min(plan.nodes.size(), lo + node_chunk);
    for (std::size_t i = lo; i < hi; ++i) {
      const double wf = plan.weights[i] * f(plan.nodes[i]);
      const auto row = basis_row(m, plan.nodes[i]);
      for (std::size_t j = 0; j < width; ++j) acc[j] += wf * row[j];
    }
    for (std::size_t j = 0; j < width; ++j) out[j] += acc[j];
  }
  return out;
}

std::vector<double> basis_integrals(const QuadraturePlan& plan, int m, const TestFunction& f) {
  require_degree(m);
  if (f.is_polynomial()) return exact_polynomial_integrals(m, f);
  const std::size_t width = static_cast<std::size_t>(m) + 1;
  const std::size_t chunks = (plan.nodes.size() + node_chunk - 1) / node_chunk;
  std::vector<double> partial(chunks * width, 0.0);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
    double* acc = partial.data() + static_cast<std::size_t>(c) * width;
    const std::size_t lo = static_cast<std::size_t>(c) * node_chunk;
    const std::size_t hi = std::min(plan.nodes.size(), lo + node_chunk);
    for (std::size_t i = lo; i < hi; ++i) {
      const double t = plan.nodes[i];
      const double wf = plan.weights[i] * f(t);
      const auto row = basis_row(m, t);
      for (std::size_t j = 0; j < width; ++j) acc[j] += wf * row[j];
    }
  }

  std::vector<double> out(width, 0.0);
  for (std::size_t c = 0; c < chunks; ++c)
    for (std::size_t j = 0; j < width; ++j) out[j] += partial[c * width + j];
  return out;
}

std::vector<double> evaluate_serial(const Approximant& op, std::span<const double> xs) {
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = op(xs[i]);
  return out;
}

std::vector<double> evaluate(const Approximant& op, std::span<const double> xs) {
  std::vector<double> out(xs.size());
  // Validate up front so no exception escapes the parallel region.
  for (double x : xs)
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("operator evaluated outside [0,1]: x = " + std::to_string(x));
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(xs.size()); ++i)
    out[static_cast<std::size_t>(i)] = op(xs[static_cast<std::size_t>(i)]);
  return out;
}

double max_window_difference_serial(std::span<const double> values, std::size_t window) {
  double best = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::size_t hi = std::min(values.size() - 1, i + window);
    for (std::size_t j = i + 1; j <= hi; ++j) best = std::max(best, std::abs(values[i] - values[j]));
  }
  return best;
}

double max_window_difference(std::span<const double> values, std::size_t window) {
  double best = 0.0;
#pragma omp parallel for schedule(static) reduction(max : best)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(values.size()); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const std::size_t hi = std::min(values.size() - 1, i + window);
    for (std::size_t j = i + 1; j <= hi; ++j) best = std::max(best, std::abs(values[i] - values[j]));
  }
  return best;
}

} // namespace gbd::kernels
