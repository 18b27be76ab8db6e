#pragma once

#include "gbd/polynomial.hpp"
#include "gbd/quadrature.hpp"
#include "gbd/rational.hpp"
#include "gbd/test_function.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gbd {

/// A parameter sequence n -> value. Sequences built from rational functions
/// of n carry an exact form, which enables exact constraint checks and the
/// rational evaluation path.
class Sequence {
public:
  static Sequence constant(const Rational& c);
  static Sequence exact(std::function<Rational(int)> fn);
  static Sequence real(std::function<double(int)> fn);

  double operator()(int n) const;
  bool has_exact() const { return static_cast<bool>(exact_); }
  Rational exact_at(int n) const;

private:
  std::function<double(int)> real_;
  std::function<Rational(int)> exact_;
};

/// alpha(x,n) = alpha1(n) x + alpha0(n), normalized by 2 alpha0 + alpha1 = 1.
struct AlphaSequences {
  Sequence alpha0;
  Sequence alpha1;
  /// lim alpha0(n), needed by the Voronovskaja target.
  std::optional<double> alpha0_limit;

  /// alpha0 = a0 for every n, alpha1 = 1 - 2 a0.
  static AlphaSequences constant(const Rational& a0);
  /// alpha0(n) = (n-1)/(2n), alpha1(n) = 1/n; the sequences of the error tables.
  static AlphaSequences standard();
  /// alpha0 = 1, alpha1 = -1: reduces to the classical genuine operator.
  static AlphaSequences classical();
  /// alpha0(n) = -1/n, alpha1(n) = 1 + 2/n: satisfies the normalization but
  /// gives a non-positive operator.
  static AlphaSequences nonpositive_example();
};

/// beta(x,n) = beta2 x^2 + beta1 x + beta0, gamma(x,n) = gamma0 x (1-x), with
/// 2 beta2 - gamma0 = 0 and 2 beta0 + beta1 + beta2 = 1.
struct BetaGammaSequences {
  Sequence beta0;
  Sequence beta1;
  Sequence beta2;
  Sequence gamma0;

  /// beta0, beta2 free; beta1 and gamma0 follow from the normalization.
  static BetaGammaSequences from_free(Sequence beta0, Sequence beta2);
  /// beta0 = 1, beta2 = n, beta1 = -n-1, gamma0 = 2n.
  static BetaGammaSequences tilde2();
  /// beta = (1-x)^2, gamma = 2x(1-x): the classical genuine operator.
  static BetaGammaSequences classical();
};

/// Fixed coefficient sequences of the third-order operator.
struct TildeU3Coefficients {
  static std::array<Rational, 5> beta(int n);
  static std::array<Rational, 5> gamma(int n);
  static Rational delta0(int n);
};

struct ClassicalGenuine {};
struct Modified1 {
  AlphaSequences alpha;
};
struct General2 {
  BetaGammaSequences sequences;
};
struct Tilde2 {};
struct Tilde3 {};

using Family = std::variant<ClassicalGenuine, Modified1, General2, Tilde2, Tilde3>;

enum class FamilyKind { ClassicalGenuine, Modified1, General2, Tilde2, Tilde3 };

FamilyKind kind_of(const Family& family);
std::string family_name(FamilyKind kind);
int minimum_degree(FamilyKind kind);

/// Every family at degree n has the shape
///
///   L(f;x) = c_0(x) (1-x)^(n-d) f(0) + c_d(x) x^(n-d) f(1)
///          + (n-1) sum_{k=1}^{n-1} [ sum_{j=0}^{d} c_j(x) p_{n-d,k-j}(x) ] int p_{n-2,k-1} f
///
/// with offset d in {0,1,2,4} and weight polynomials c_j.
template <typename T> struct Blend {
  int offset = 0;
  std::vector<Polynomial<T>> weights;
};

/// Operator family plus degree, validated on construction: n >= 2 (n >= 5 for
/// Tilde3) and the normalization constraints, checked exactly for rational
/// sequences and to 1e-12 otherwise. Throws ConstraintError on violation.
class OperatorSpec {
public:
  OperatorSpec(Family family, int n);

  const Family& family() const { return family_; }
  FamilyKind kind() const { return kind_of(family_); }
  int n() const { return n_; }
  const Blend<double>& blend() const { return blend_; }
  /// Present when every parameter is rational at this n.
  const std::optional<Blend<Rational>>& exact_blend() const { return exact_blend_; }

private:
  Family family_;
  int n_;
  Blend<double> blend_;
  std::optional<Blend<Rational>> exact_blend_;
};

/// Weight multiplying the k-th integral term, 1 <= k <= n-1. Throws IndexError otherwise.
double blended_weight(const OperatorSpec& spec, int k, double x);
Rational blended_weight_exact(const OperatorSpec& spec, int k, const Rational& x);

/// alpha(x,n) p_{n-1,k}(x) + alpha(1-x,n) p_{n-1,k-1}(x). Throws
/// UnsupportedError for other families and IndexError outside 1..n-1.
double blended_weight_u1(const OperatorSpec& spec, int k, double x);

/// An operator bound to one function: the integrals int p_{n-2,k-1} f are
/// computed once, after which evaluation at any x costs O(n).
class Approximant {
public:
  Approximant(OperatorSpec spec, const TestFunction& f);
  Approximant(OperatorSpec spec, const TestFunction& f, const QuadraturePlan& plan);

  /// Throws DomainError unless 0 <= x <= 1.
  double operator()(double x) const;

  const OperatorSpec& spec() const { return spec_; }
  /// Entry k-1 holds int p_{n-2,k-1}(t) f(t) dt.
  const std::vector<double>& integrals() const { return integrals_; }

private:
  OperatorSpec spec_;
  std::vector<double> integrals_;
  double f0_;
  double f1_;
};

double apply(const OperatorSpec& spec, const TestFunction& f, double x);

/// Exact operator value. Throws ConstraintError when the spec has no exact
/// parameters and DomainError unless 0 <= x <= 1.
Rational apply_exact(const OperatorSpec& spec, const Polynomial<Rational>& f, const Rational& x);
/// Throws UnsupportedError unless f is a polynomial.
Rational apply_exact(const OperatorSpec& spec, const TestFunction& f, const Rational& x);

/// True iff alpha0(n) >= 0 and alpha0(n) + alpha1(n) >= 0. Throws
/// UnsupportedError for families other than Modified1.
bool is_positive(const OperatorSpec& spec);

} // namespace gbd
