#include "gbd/analysis.hpp"
#include "gbd/errors.hpp"
#include "gbd/fit.hpp"
#include "gbd/moments.hpp"

#include "doctest.h"

#include <cmath>

using namespace gbd;

TEST_SUITE("analysis") {

TEST_CASE("modulus of continuity examples") {
  CHECK(std::abs(modulus_of_continuity(TestFunction::monomial(1), 0.1) - 0.1) <= 1e-6);
  CHECK(modulus_of_continuity(TestFunction::monomial(0), 0.3) == 0.0);
  // 10^5-point exhaustive search.
  CHECK(std::abs(modulus_of_continuity(TestFunction::g1(), 1 / std::sqrt(10.0)) - 2.7775581197939028) <= 1e-4);
  CHECK_THROWS_AS(modulus_of_continuity(TestFunction::g1(), 0.0), DomainError);
  CHECK_THROWS_AS(modulus_of_continuity(TestFunction::g1(), 1.5), DomainError);
  CHECK_THROWS_AS(modulus_of_continuity(TestFunction::g1(), 0.1, 999), DomainError);
}

TEST_CASE("modulus of continuity is monotone and subadditive on the grid") {
  for (const char* name : {"g1", "g2", "g3"}) {
    const auto f = TestFunction::builtin(name);
    double previous = 0.0;
    for (int i = 1; i <= 40; ++i) {
      const double delta = i / 80.0;
      const double w = modulus_of_continuity(f, delta);
      CHECK(w >= previous);
      CHECK(modulus_of_continuity(f, 2 * delta) <= 2 * w + 1e-9);
      previous = w;
    }
  }
}

TEST_CASE("uniform bound") {
  const auto g1 = check_theorem1_bound(AlphaSequences::constant(Rational(9, 20)), TestFunction::g1(), 10);
  CHECK(g1.holds);
  CHECK(g1.rhs == doctest::Approx(2 * (3 * 0.1 + 1) * g1.omega));
  const auto constant = check_theorem1_bound(AlphaSequences::standard(), TestFunction::monomial(0), 7);
  CHECK(constant.lhs <= 1e-14);
  CHECK(constant.holds);
  CHECK(check_theorem1_bound(AlphaSequences::classical(), TestFunction::monomial(2), 25).holds);
}

TEST_CASE("Voronovskaja for quadratics is exact") {
  const Polynomial<Rational> p{Rational(1, 5), Rational(-2), Rational(3)};
  const auto f = TestFunction::polynomial(p);
  for (const auto& a0 : {Rational(0), Rational(9, 20), Rational(1)})
    for (int n : {3, 10, 100})
      for (double x : {0.0, 0.2, 0.5, 0.9}) {
        const double ad = to_double(a0);
        const double mu1 = central_moment_u1_closed<double>(n, ad, 1, x);
        const double mu2 = central_moment_u1_closed<double>(n, ad, 2, x);
        const double lhs = n * (apply(OperatorSpec(Modified1{AlphaSequences::constant(a0)}, n), f, x) - f(x));
        CHECK(std::abs(lhs - (n * mu1 * f.derivative(1, x) + n * mu2 * f.derivative(2, x) / 2)) <= 1e-12);
        const double target = voronovskaja_target(ad, f, x).value;
        CHECK(voronovskaja_residual(AlphaSequences::constant(a0), ad, f, x, n) ==
              doctest::Approx(std::abs(lhs - target)).epsilon(1e-9));
      }
}

TEST_CASE("Voronovskaja target vanishes at 1/2 when f'' does") {
  const auto f = TestFunction::polynomial(Polynomial<Rational>{0, 0, Rational(-3, 2), 1});
  CHECK(voronovskaja_target(0.3, f, 0.5).value == doctest::Approx(0.0));
  for (int n : {16, 64, 256, 1024})
    CHECK(voronovskaja_residual(AlphaSequences::constant(Rational(3, 10)), 0.3, f, 0.5, n) < 1e-12);
}

TEST_CASE("Voronovskaja limit for g3") {
  const auto g3 = TestFunction::g3();
  const double target = voronovskaja_target(0.5, g3, 0.3).value;
  CHECK(voronovskaja_residual(AlphaSequences::standard(), g3, 0.3, 4096) <= 0.05 * std::abs(target));
  CHECK_THROWS_AS(voronovskaja_residual(AlphaSequences{Sequence::constant(1), Sequence::constant(-1), std::nullopt}, g3, 0.3, 8),
                  std::invalid_argument);
  CHECK_THROWS_AS(voronovskaja_target(0.5, TestFunction::callable("bare", [](double x) { return x; }), 0.3),
                  UnsupportedError);
}

TEST_CASE("Voronovskaja residual has a decreasing tail") {
  for (const auto& alpha : {AlphaSequences::standard(), AlphaSequences::nonpositive_example()})
    for (const char* name : {"g1", "g3"})
      for (double x : {0.3, 0.7}) {
        const auto f = TestFunction::builtin(name);
        int inversions = 0;
        double previous = 1e300;
        for (int n = 64; n <= 4096; n *= 2) {
          const double r = voronovskaja_residual(alpha, f, x, n);
          if (r >= previous) ++inversions;
          previous = r;
        }
        INFO(name << " x=" << x);
        CHECK(inversions <= 1);
      }
}

TEST_CASE("least squares line") {
  const std::vector<double> xs = {1, 2, 3, 4};
  const std::vector<double> ys = {3, 5, 7, 9};
  const auto fit = least_squares_line(xs, ys);
  CHECK(fit.slope == doctest::Approx(2.0));
  CHECK(fit.intercept == doctest::Approx(1.0));
  CHECK(fit.r_squared == doctest::Approx(1.0));
}

TEST_CASE("order fit mechanics") {
  const std::vector<int> ns = {16, 32, 64, 128, 256};
  const auto u1 = fit_convergence_order(Modified1{AlphaSequences::standard()}, TestFunction::g3(), 0.3, ns);
  CHECK(u1.slope == doctest::Approx(-1.0).epsilon(0.2));
  CHECK(u1.fitted_n == ns);
  CHECK(u1.errors.size() == ns.size());

  const std::vector<int> few = {16, 32, 64};
  CHECK_THROWS_AS(fit_convergence_order(Tilde2{}, TestFunction::g3(), 0.3, few), std::invalid_argument);
  const std::vector<int> unordered = {16, 64, 32, 128};
  CHECK_THROWS_AS(fit_convergence_order(Tilde2{}, TestFunction::g3(), 0.3, unordered), std::invalid_argument);
  const std::vector<int> small = {5, 6, 7, 8};
  CHECK_THROWS_AS(fit_convergence_order(Tilde2{}, TestFunction::monomial(1), 0.3, small), DegenerateFitError);
  const std::vector<int> low = {2, 3, 4, 5};
  CHECK_THROWS_AS(fit_convergence_order(Tilde3{}, TestFunction::g3(), 0.3, low), ConstraintError);
}

TEST_CASE("higher-order operators converge faster than the first-order one") {
  const std::vector<int> ns = {64, 128, 256, 512, 1024};
  const auto u1 = fit_convergence_order(Modified1{AlphaSequences::standard()}, TestFunction::g3(), 0.3, ns);
  const auto t2 = fit_convergence_order(Tilde2{}, TestFunction::g3(), 0.3, ns);
  const auto t3 = fit_convergence_order(Tilde3{}, TestFunction::g3(), 0.3, ns);
  CHECK(t2.slope < -1.75);
  CHECK(t3.slope < -2.75);
  CHECK(t3.errors.back() < t2.errors.back());
  CHECK(t2.errors.back() < u1.errors.back());
}
}
