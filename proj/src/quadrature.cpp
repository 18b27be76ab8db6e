#include "gbd/quadrature.hpp"

#include "gbd/basis.hpp"
#include "gbd/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

namespace gbd {

namespace {

// Legendre P_size and its derivative at t in [-1,1].
std::pair<long double, long double> legendre(int size, long double t) {
  long double p0 = 1.0L;
  long double p1 = t;
  for (int k = 2; k <= size; ++k) {
    const long double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const long double dp = size * (t * p1 - p0) / (t * t - 1.0L);
  return {p1, dp};
}

GaussLegendreRule build_rule(int size) {
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(size));
  rule.weights.resize(static_cast<std::size_t>(size));
  const int half = (size + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th largest root.
    const long double theta = std::numbers::pi_v<long double> * (i + 0.75L) / (size + 0.5L);
    long double t = (1.0L - (size - 1.0L) / (8.0L * size * size * size)) * std::cos(theta);
    long double dp = 1.0L;
    for (int iter = 0; iter < 100; ++iter) {
      auto [p, d] = legendre(size, t);
      const long double step = p / d;
      t -= step;
      dp = d;
      if (std::abs(step) < 1e-19L) break;
    }
    dp = legendre(size, t).second;
    const long double w = 2.0L / ((1.0L - t * t) * dp * dp);
    // Map to [0,1]; fill symmetric pairs so the rule is exactly symmetric.
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(size - 1 - i);
    rule.nodes[lo] = static_cast<double>((1.0L - t) / 2.0L);
    rule.nodes[hi] = static_cast<double>((1.0L + t) / 2.0L);
    rule.weights[lo] = static_cast<double>(w / 2.0L);
    rule.weights[hi] = static_cast<double>(w / 2.0L);
  }
  if (size % 2 == 1) rule.nodes[static_cast<std::size_t>(size / 2)] = 0.5;
  return rule;
}

int panel_nodes_for(int max_poly_degree, int resolution) {
  int nodes = default_panel_nodes;
  if (max_poly_degree > 100)
    while (2 * nodes - 1 < max_poly_degree + resolution) nodes *= 2;
  return nodes;
}

QuadraturePlan assemble(int panel_nodes, std::vector<double> breakpoints) {
  QuadraturePlan plan;
  plan.nodes_per_panel = panel_nodes;
  plan.breakpoints = std::move(breakpoints);
  const auto rule = gauss_legendre(panel_nodes);
  std::vector<double> edges{0.0};
  edges.insert(edges.end(), plan.breakpoints.begin(), plan.breakpoints.end());
  edges.push_back(1.0);
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double a = edges[p];
    const double width = edges[p + 1] - a;
    for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
      plan.nodes.push_back(a + width * rule->nodes[i]);
      plan.weights.push_back(width * rule->weights[i]);
    }
  }
  return plan;
}

} // namespace

std::shared_ptr<const GaussLegendreRule> gauss_legendre(int size) {
  if (size < 1) throw DomainError("Gauss-Legendre rule needs at least one node");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const GaussLegendreRule>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(size); it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const GaussLegendreRule>(build_rule(size));
  std::lock_guard lock(mutex);
  return cache.try_emplace(size, std::move(rule)).first->second;
}

QuadratureMeta quadrature_meta(const TestFunction& f) { return {f.kinks(), f.resolution()}; }

QuadraturePlan make_plan(int max_poly_degree, const QuadratureMeta& meta) {
  if (max_poly_degree < 0) throw DomainError("negative polynomial degree for quadrature plan");
  std::vector<double> breaks;
  for (double k : meta.kinks)
    if (k > 0.0 && k < 1.0) breaks.push_back(k);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  return assemble(panel_nodes_for(max_poly_degree, meta.resolution), std::move(breaks));
}

QuadraturePlan make_plan(int max_poly_degree, const TestFunction& f) {
  return make_plan(max_poly_degree, quadrature_meta(f));
}

QuadraturePlan refine_plan(const QuadraturePlan& plan, int factor) {
  if (factor < 1) throw DomainError("refinement factor must be positive");
  return assemble(plan.nodes_per_panel * factor, plan.breakpoints);
}

Rational integrate_against_basis_exact(int m, int j, const Polynomial<Rational>& p) {
  if (m < 0 || j < 0 || j > m)
    throw DomainError("basis index out of range: m = " + std::to_string(m) + ", j = " + std::to_string(j));
  Rational sum = 0;
  for (int s = 0; s <= p.degree(); ++s)
    if (p.coefficient(s) != 0) sum += p.coefficient(s) * basis_monomial_integral(m, j, s);
  return sum;
}

double integrate_against_basis(const QuadraturePlan& plan, int m, int j, const TestFunction& f) {
  if (m < 0 || j < 0 || j > m)
    throw DomainError("basis index out of range: m = " + std::to_string(m) + ", j = " + std::to_string(j));
  if (f.is_polynomial()) return to_double(integrate_against_basis_exact(m, j, f.exact_polynomial()));
  double sum = 0.0;
  for (std::size_t i = 0; i < plan.nodes.size(); ++i)
    sum += plan.weights[i] * eval_basis({m, j}, plan.nodes[i]) * f(plan.nodes[i]);
  return sum;
}

} // namespace gbd
