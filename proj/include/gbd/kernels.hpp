#pragma once

#include "gbd/operators.hpp"
#include "gbd/quadrature.hpp"
#include "gbd/test_function.hpp"

#include <cstddef>
#include <span>
#include <vector>

/// Data-parallel inner loops. Each OpenMP kernel has a `_serial` twin that is
/// the plain reference loop; tests compare the two and the benchmark target
/// times them against each other.
///
/// Results do not depend on the thread count: work is split into fixed-size
/// chunks whose partial results are combined in chunk order.
namespace gbd::kernels {

/// int p_{m,j}(t) f(t) dt for j = 0..m on the given plan (exact Beta path for
/// polynomial f).
std::vector<double> basis_integrals(const QuadraturePlan& plan, int m, const TestFunction& f);
std::vector<double> basis_integrals_serial(const QuadraturePlan& plan, int m, const TestFunction& f);

/// The approximant at every point of `xs`.
std::vector<double> evaluate(const Approximant& op, std::span<const double> xs);
std::vector<double> evaluate_serial(const Approximant& op, std::span<const double> xs);

/// max |values[i] - values[j]| over 0 < j - i <= window.
double max_window_difference(std::span<const double> values, std::size_t window);
double max_window_difference_serial(std::span<const double> values, std::size_t window);

/// Number of OpenMP threads the kernels will use.
int thread_count();

} // namespace gbd::kernels
