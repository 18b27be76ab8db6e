#pragma once

#include "gbd/rational.hpp"
#include "gbd/test_function.hpp"

#include <memory>
#include <vector>

namespace gbd {

/// Gauss-Legendre rule on [0,1] with `size` nodes. Nodes come from Newton
/// iteration on the three-term Legendre recurrence; rules are memoized and
/// shared, so repeated requests for the same size are cheap.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

std::shared_ptr<const GaussLegendreRule> gauss_legendre(int size);

/// Composite rule: one Gauss-Legendre panel per smooth sub-interval of [0,1].
struct QuadraturePlan {
  std::vector<double> nodes;
  std::vector<double> weights;
  /// Sorted interior kink locations that split the panels.
  std::vector<double> breakpoints;
  int nodes_per_panel = 0;

  std::size_t panel_count() const { return breakpoints.size() + 1; }
};

struct QuadratureMeta {
  std::vector<double> kinks;
  int resolution = 64;
};

QuadratureMeta quadrature_meta(const TestFunction& f);

inline constexpr int default_panel_nodes = 64;

/// 64 nodes per panel; above basis degree 100 the count doubles until the
/// panel rule is exact for degree max_poly_degree + resolution.
QuadraturePlan make_plan(int max_poly_degree, const QuadratureMeta& meta);
QuadraturePlan make_plan(int max_poly_degree, const TestFunction& f);
/// Same plan with every panel's node count multiplied by `factor`.
QuadraturePlan refine_plan(const QuadraturePlan& plan, int factor);

/// Integral of p_{m,j}(t) f(t) over [0,1]. Polynomials with rational
/// coefficients take the exact Beta-integral path; other functions use the plan.
/// Throws DomainError unless 0 <= j <= m.
double integrate_against_basis(const QuadraturePlan& plan, int m, int j, const TestFunction& f);

/// Exact integral of p_{m,j}(t) p(t) over [0,1].
Rational integrate_against_basis_exact(int m, int j, const Polynomial<Rational>& p);

} // namespace gbd
