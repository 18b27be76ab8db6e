#pragma once

#include "gbd/errors.hpp"
#include "gbd/operators.hpp"
#include "gbd/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace gbd {

// Closed-form moments m_k = L(e_k; x) and central moments mu_k = L((t-x)^k; x).
// Each is a template so the same expression serves the double path and the
// exact rational path. Unsupported orders throw UnsupportedError.

template <typename T> T moment_u1_closed(int n, const T& alpha0, int k, const T& x) {
  const T nn(n);
  switch (k) {
  case 0:
    return T(1);
  case 1:
    return (x * nn + (1 - 2 * x) * (1 - alpha0)) / nn;
  case 2:
    return (x * x * nn * nn + (4 * alpha0 * x - 2 * alpha0 - 5 * x + 4) * x * nn +
            2 * (1 - x) * (1 - 2 * x) * (1 - alpha0)) /
           (nn * (nn + 1));
  default:
    throw UnsupportedError("modified1 moment of order " + std::to_string(k) + " has no closed form");
  }
}

template <typename T> T central_moment_u1_closed(int n, const T& alpha0, int k, const T& x) {
  const T nn(n);
  const T u = x * (1 - x);
  const T s = 1 - 2 * x;
  switch (k) {
  case 1:
    return s * (1 - alpha0) / nn;
  case 2:
    return 2 * (u * nn + s * s * (1 - alpha0)) / (nn * (nn + 1));
  case 4:
    return 12 *
           (u * u * nn * nn - u * nn * (4 * alpha0 * s * s + 23 * u - 6) + 2 * s * s * s * s * (1 - alpha0)) /
           (nn * (nn + 1) * (nn + 2) * (nn + 3));
  default:
    throw UnsupportedError("modified1 central moment of order " + std::to_string(k) + " has no closed form");
  }
}

template <typename T> T moment_tilde2_closed(int n, int k, const T& x) {
  const T nn(n);
  switch (k) {
  case 0:
    return T(1);
  case 1:
    return x;
  case 2:
    return x * x + 2 * x * (1 - x) / (nn * (nn + 1));
  default:
    throw UnsupportedError("tilde2 moment of order " + std::to_string(k) + " has no closed form");
  }
}

/// Orders 2 and 3 are exact. Orders 4, 5, 6 return the leading term only; the
/// remainder is O(n^-3) for order 4 and O(n^-4) for orders 5 and 6.
template <typename T> T central_moment_tilde2_closed(int n, int k, const T& x) {
  const T nn(n);
  const T u = x * (1 - x);
  switch (k) {
  case 2:
    return 2 * u / (nn * (nn + 1));
  case 3:
    return -6 * u * (1 - 2 * x) * (nn - 2) / (nn * (nn + 1) * (nn + 2));
  case 4:
    return -12 * u * u * nn / ((nn + 1) * (nn + 2) * (nn + 3));
  case 5:
    return 240 * u * u * (2 * x - 1) * nn / ((nn + 1) * (nn + 2) * (nn + 3) * (nn + 4));
  case 6:
    return -240 * u * u * u * nn * nn / ((nn + 1) * (nn + 2) * (nn + 3) * (nn + 4) * (nn + 5));
  default:
    throw UnsupportedError("tilde2 central moment of order " + std::to_string(k) + " has no closed form");
  }
}

/// Orders 1..3 vanish identically. Orders 4, 5, 6 return the leading term with
/// denominators (n+1)(n+2)(n+3), ... read as products; remainders are O(n^-4).
template <typename T> T central_moment_tilde3_closed(int n, int k, const T& x) {
  const T nn(n);
  const T u = x * (1 - x);
  switch (k) {
  case 1:
  case 2:
  case 3:
    return T(0);
  case 4:
    return 4 * u * (39 * x * x - 39 * x + 10) / ((nn + 1) * (nn + 2) * (nn + 3));
  case 5:
    return 120 * (1 - 2 * x) * u * u * nn / ((nn + 1) * (nn + 2) * (nn + 3) * (nn + 4));
  case 6:
    return 120 * u * u * u * nn * nn / ((nn + 1) * (nn + 2) * (nn + 3) * (nn + 4) * (nn + 5));
  default:
    throw UnsupportedError("tilde3 central moment of order " + std::to_string(k) +
                           " has no closed form; use central_moment_exact");
  }
}

// ---------------------------------------------------------------------------
// Exact oracles

/// m_0, ..., m_max_order at x, through apply_exact on e_j.
std::vector<Rational> moments_exact(const OperatorSpec& spec, int max_order, const Rational& x);

/// mu_k(x) = sum_j C(k,j) (-x)^(k-j) m_j(x), computed exactly.
Rational central_moment_exact(const OperatorSpec& spec, int k, const Rational& x);
Rational central_moment_from_moments(std::span<const Rational> moments, int k, const Rational& x);

// ---------------------------------------------------------------------------
// Lemma verification

enum class Lemma {
  U1Moments,            // m_0, m_1, m_2 of modified1
  U1CentralMoments,     // mu_1, mu_2, mu_4 of modified1
  Tilde2Moments,        // m_0, m_1, m_2 of tilde2
  Tilde2CentralMoments, // mu_2, mu_3 of tilde2
  Tilde3CentralMoments, // mu_1 = mu_2 = mu_3 = 0 for tilde3
};

std::string lemma_name(Lemma lemma);
/// Accepts the names produced by lemma_name. Throws std::invalid_argument otherwise.
Lemma parse_lemma(const std::string& name);
FamilyKind lemma_family(Lemma lemma);
std::vector<int> lemma_orders(Lemma lemma);
bool lemma_is_central(Lemma lemma);

struct MomentReport {
  FamilyKind family = FamilyKind::ClassicalGenuine;
  int n = 0;
  Rational x;
  int order = 0;
  bool central = false;
  double closed_form = 0.0;
  double oracle = 0.0;
  double abs_gap = 0.0;
  /// Gap computed in rational arithmetic.
  bool exact_path = false;
  bool exact_match = false;

  bool consistent() const { return exact_path ? exact_match : abs_gap <= 1e-11; }
};

/// One report per (n, x, order). The U1 lemmas use `alpha`, which must have
/// exact sequences; other lemmas ignore it. Reports are computed concurrently
/// and returned in (n, x, order) order.
std::vector<MomentReport> verify_lemma(Lemma lemma, std::span<const int> ns, std::span<const Rational> xs,
                                       const AlphaSequences& alpha = AlphaSequences::standard());

/// Closed-form value of a lemma order at (n, x), exact.
Rational lemma_closed_form(Lemma lemma, int n, const Rational& alpha0, int order, const Rational& x);

// ---------------------------------------------------------------------------
// Asymptotic remainders

struct RemainderCheck {
  FamilyKind family = FamilyKind::Tilde2;
  int order = 0;
  int exponent = 0;
  std::vector<int> ns;
  std::vector<double> oracle;
  std::vector<double> leading;
  /// n^exponent * |oracle - leading|.
  std::vector<double> scaled_gap;
  double ratio = 0.0; // max / min of scaled_gap

  bool bounded(double max_ratio = 10.0) const { return ratio < max_ratio; }
};

/// Compares the exact central moment with its leading term for tilde2 or
/// tilde3, orders 4..6.
RemainderCheck remainder_check(FamilyKind family, int order, const Rational& x, std::span<const int> ns,
                               int exponent);

/// Least-squares slope of log|mu_k| against log n; the only check available
/// for tilde3 orders 7..10, which have no closed form.
double central_moment_decay_rate(FamilyKind family, int order, const Rational& x, std::span<const int> ns);

} // namespace gbd
