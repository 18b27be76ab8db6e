#include "gbd/errors.hpp"
#include "gbd/moments.hpp"

#include "doctest.h"

#include <cmath>

using namespace gbd;

namespace {

const std::vector<Rational> lemma_grid = {0, Rational(1, 7), Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                          Rational(6, 7), 1};

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int n = lo; n <= hi; ++n) v.push_back(n);
  return v;
}

} // namespace

TEST_SUITE("moments") {

TEST_CASE("modified1 moment examples") {
  const Rational a(9, 20);
  CHECK(moment_u1_closed<Rational>(10, a, 1, Rational(1, 2)) == Rational(1, 2));
  CHECK(moment_u1_closed<Rational>(10, a, 1, Rational(1, 4)) == Rational(111, 400));
  CHECK(moment_u1_closed<double>(10, 0.45, 1, 0.25) == doctest::Approx(0.2775).epsilon(1e-15));
  const OperatorSpec spec(Modified1{AlphaSequences::constant(Rational(3, 7))}, 7);
  CHECK(moment_u1_closed<Rational>(7, Rational(3, 7), 2, Rational(2, 5)) ==
        apply_exact(spec, TestFunction::monomial(2), Rational(2, 5)));
  CHECK_THROWS_AS(moment_u1_closed<double>(10, 0.45, 3, 0.25), UnsupportedError);
}

TEST_CASE("modified1 central moment examples") {
  const Rational a(9, 20);
  for (int n : {2, 9, 40}) CHECK(central_moment_u1_closed<Rational>(n, a, 1, Rational(1, 2)) == 0);
  CHECK(central_moment_u1_closed<Rational>(10, a, 2, Rational(1, 4)) ==
        Rational(2, 110) * (Rational(3, 16) * 10 + Rational(1, 4) * Rational(11, 20)));
  const OperatorSpec spec(Modified1{AlphaSequences::constant(Rational(1, 3))}, 8);
  CHECK(central_moment_u1_closed<Rational>(8, Rational(1, 3), 4, Rational(3, 7)) ==
        central_moment_exact(spec, 4, Rational(3, 7)));
  CHECK_THROWS_AS(central_moment_u1_closed<double>(10, 0.45, 3, 0.25), UnsupportedError);
}

TEST_CASE("tilde2 examples") {
  CHECK(central_moment_tilde2_closed<Rational>(10, 2, Rational(1, 2)) == Rational(1, 220));
  for (int n : {2, 7, 30}) CHECK(central_moment_tilde2_closed<Rational>(n, 3, Rational(1, 2)) == 0);
  CHECK(moment_tilde2_closed<Rational>(10, 1, Rational(2, 5)) == Rational(2, 5));
  CHECK_THROWS_AS(central_moment_tilde2_closed<double>(10, 7, 0.3), UnsupportedError);
  CHECK_THROWS_AS(moment_tilde2_closed<double>(10, 3, 0.3), UnsupportedError);

  const OperatorSpec spec(Tilde2{}, 12);
  const double oracle = to_double(central_moment_exact(spec, 4, Rational(1, 3)));
  const double leading = central_moment_tilde2_closed<double>(12, 4, 1.0 / 3.0);
  CHECK(std::abs(oracle - leading) * std::pow(12.0, 3) <= 1.0);
}

TEST_CASE("tilde3 examples") {
  CHECK(central_moment_tilde3_closed<double>(6, 2, 0.37) == 0.0);
  const OperatorSpec spec(Tilde3{}, 6);
  for (int k = 1; k <= 3; ++k) CHECK(central_moment_exact(spec, k, Rational(2, 7)) == 0);
  const OperatorSpec spec16(Tilde3{}, 16);
  const double oracle = to_double(central_moment_exact(spec16, 4, Rational(3, 10)));
  const double leading = central_moment_tilde3_closed<double>(16, 4, 0.3);
  CHECK(leading == doctest::Approx(4 * 0.21 * (39 * 0.09 - 39 * 0.3 + 10) / (17.0 * 18 * 19)));
  CHECK(std::abs(oracle - leading) * std::pow(16.0, 4) <= 2.0);
  CHECK_THROWS_AS(central_moment_tilde3_closed<double>(16, 7, 0.3), UnsupportedError);
}

TEST_CASE("central moments from moments") {
  const std::vector<Rational> m = {1, Rational(1, 2), Rational(1, 3)};
  CHECK(central_moment_from_moments(m, 2, Rational(1, 2)) == Rational(1, 3) - Rational(1, 2) + Rational(1, 4));
  CHECK(central_moment_from_moments(m, 0, Rational(1, 2)) == 1);
}

TEST_CASE("lemma names") {
  for (auto lemma : {Lemma::U1Moments, Lemma::U1CentralMoments, Lemma::Tilde2Moments, Lemma::Tilde2CentralMoments,
                     Lemma::Tilde3CentralMoments})
    CHECK(parse_lemma(lemma_name(lemma)) == lemma);
  CHECK_THROWS_AS(parse_lemma("lemma-9"), std::invalid_argument);
  CHECK(lemma_orders(Lemma::U1CentralMoments) == std::vector<int>{1, 2, 4});
  CHECK(lemma_family(Lemma::Tilde3CentralMoments) == FamilyKind::Tilde3);
}

TEST_CASE("every exact lemma holds in rational arithmetic") {
  const auto ns = range(2, 20);
  for (const auto& a0 : {Rational(0), Rational(1, 3), Rational(9, 20), Rational(1)})
    for (auto lemma : {Lemma::U1Moments, Lemma::U1CentralMoments}) {
      const auto reports = verify_lemma(lemma, ns, lemma_grid, AlphaSequences::constant(a0));
      CHECK(reports.size() == ns.size() * lemma_grid.size() * lemma_orders(lemma).size());
      for (const auto& r : reports) {
        CHECK(r.exact_path);
        CHECK(r.exact_match);
        CHECK(r.abs_gap == 0.0);
      }
    }
  for (auto lemma : {Lemma::Tilde2Moments, Lemma::Tilde2CentralMoments})
    for (const auto& r : verify_lemma(lemma, ns, lemma_grid)) CHECK(r.consistent());
  for (const auto& r : verify_lemma(Lemma::Tilde3CentralMoments, range(5, 16), lemma_grid)) {
    CHECK(r.consistent());
    CHECK(r.oracle == 0.0);
  }
}

TEST_CASE("lemma verification with n-dependent sequences") {
  for (const auto& r : verify_lemma(Lemma::U1CentralMoments, range(2, 12), lemma_grid, AlphaSequences::standard()))
    CHECK(r.consistent());
}

TEST_CASE("lemma verification rejects bad input") {
  const std::vector<Rational> outside = {Rational(3, 2)};
  CHECK_THROWS_AS(verify_lemma(Lemma::U1Moments, range(2, 4), outside), DomainError);
  CHECK_THROWS_AS(verify_lemma(Lemma::Tilde3CentralMoments, range(4, 6), lemma_grid), ConstraintError);
}

TEST_CASE("second central moment identity") {
  for (int n : {2, 5, 13, 50})
    for (double a0 : {0.0, 0.3, 0.45, 1.0})
      for (int i = 0; i <= 20; ++i) {
        const double x = i / 20.0;
        const double m0 = moment_u1_closed<double>(n, a0, 0, x);
        const double m1 = moment_u1_closed<double>(n, a0, 1, x);
        const double m2 = moment_u1_closed<double>(n, a0, 2, x);
        CHECK(std::abs(m2 - 2 * x * m1 + x * x * m0 - central_moment_u1_closed<double>(n, a0, 2, x)) <= 1e-13);
        const double t1 = moment_tilde2_closed<double>(n, 1, x);
        const double t2 = moment_tilde2_closed<double>(n, 2, x);
        CHECK(std::abs(t2 - 2 * x * t1 + x * x - central_moment_tilde2_closed<double>(n, 2, x)) <= 1e-13);
      }
}

TEST_CASE("second central moment of modified1 is nonnegative for alpha0 <= 1") {
  double lowest = 1.0;
  for (double a0 : {-2.0, -0.5, 0.0, 0.45, 1.0})
    for (int n = 2; n <= 40; ++n)
      for (int i = 0; i <= 100; ++i) lowest = std::min(lowest, central_moment_u1_closed<double>(n, a0, 2, i / 100.0));
  CHECK(lowest >= 0.0);
}

TEST_CASE("asymptotic remainders stay bounded") {
  const std::vector<int> ns = {8, 16, 32, 64};
  const Rational x(1, 3);
  CHECK(remainder_check(FamilyKind::Tilde2, 4, x, ns, 3).bounded());
  for (int k : {5, 6}) CHECK(remainder_check(FamilyKind::Tilde2, k, x, ns, 4).bounded());
  for (int k : {4, 5, 6}) CHECK(remainder_check(FamilyKind::Tilde3, k, x, ns, 4).bounded());
  CHECK_THROWS_AS(remainder_check(FamilyKind::Modified1, 4, x, ns, 3), UnsupportedError);
  CHECK_THROWS_AS(remainder_check(FamilyKind::Tilde3, 7, x, ns, 4), UnsupportedError);
}

TEST_CASE("sum reading of the third-order denominators is refuted") {
  const Rational x(1, 3);
  const Rational u = x * (1 - x);
  std::vector<double> scaled;
  for (int n : {8, 16, 32, 64}) {
    const Rational oracle = central_moment_exact(OperatorSpec(Tilde3{}, n), 4, x);
    const Rational sum_reading = 4 * u * (39 * x * x - 39 * x + 10) / Rational(3 * n + 6);
    scaled.push_back(to_double(abs(oracle - sum_reading)) * std::pow(n, 4.0));
  }
  CHECK(scaled.back() / scaled.front() > 100.0);
}

TEST_CASE("third-order higher central moments decay at the stated rates") {
  const std::vector<int> ns = {64, 128, 256, 512};
  const Rational x(1, 3);
  CHECK(central_moment_decay_rate(FamilyKind::Tilde3, 7, x, ns) <= -3.75);
  CHECK(central_moment_decay_rate(FamilyKind::Tilde3, 8, x, ns) <= -3.75);
  CHECK(central_moment_decay_rate(FamilyKind::Tilde3, 9, x, ns) <= -4.75);
  CHECK(central_moment_decay_rate(FamilyKind::Tilde3, 10, x, ns) <= -4.75);
}
}
