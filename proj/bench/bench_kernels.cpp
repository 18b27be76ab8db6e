#include "gbd/kernels.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

std::vector<double> grid(int points) {
  std::vector<double> xs(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) xs[static_cast<std::size_t>(i)] = static_cast<double>(i) / (points - 1);
  return xs;
}

void BM_BasisIntegrals(benchmark::State& state, bool parallel) {
  const int n = static_cast<int>(state.range(0));
  const auto f = gbd::TestFunction::g2();
  const auto plan = gbd::make_plan(n - 2, f);
  for (auto _ : state) {
    auto v = parallel ? gbd::kernels::basis_integrals(plan, n - 2, f) : gbd::kernels::basis_integrals_serial(plan, n - 2, f);
    benchmark::DoNotOptimize(v.data());
  }
}

void BM_Evaluate(benchmark::State& state, bool parallel) {
  const int n = static_cast<int>(state.range(0));
  const gbd::Approximant op(gbd::OperatorSpec(gbd::Tilde3{}, n), gbd::TestFunction::g3());
  const auto xs = grid(2001);
  for (auto _ : state) {
    auto v = parallel ? gbd::kernels::evaluate(op, xs) : gbd::kernels::evaluate_serial(op, xs);
    benchmark::DoNotOptimize(v.data());
  }
}

void BM_WindowDifference(benchmark::State& state, bool parallel) {
  const auto f = gbd::TestFunction::g1();
  const auto xs = grid(static_cast<int>(state.range(0)));
  std::vector<double> values(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) values[i] = f(xs[i]);
  const std::size_t window = values.size() / 10;
  for (auto _ : state) {
    double m = parallel ? gbd::kernels::max_window_difference(values, window)
                        : gbd::kernels::max_window_difference_serial(values, window);
    benchmark::DoNotOptimize(m);
  }
}

} // namespace

BENCHMARK_CAPTURE(BM_BasisIntegrals, serial, false)->Arg(64)->Arg(512);
BENCHMARK_CAPTURE(BM_BasisIntegrals, parallel, true)->Arg(64)->Arg(512);
BENCHMARK_CAPTURE(BM_Evaluate, serial, false)->Arg(10)->Arg(256);
BENCHMARK_CAPTURE(BM_Evaluate, parallel, true)->Arg(10)->Arg(256);
BENCHMARK_CAPTURE(BM_WindowDifference, serial, false)->Arg(4097);
BENCHMARK_CAPTURE(BM_WindowDifference, parallel, true)->Arg(4097);

BENCHMARK_MAIN();
