#include "gbd/operators.hpp"

#include "gbd/basis.hpp"
#include "gbd/errors.hpp"
#include "gbd/kernels.hpp"

#include <cmath>
#include <string>

namespace gbd {

// ---------------------------------------------------------------------------
// Sequences

Sequence Sequence::constant(const Rational& c) {
  return exact([c](int) { return c; });
}

Sequence Sequence::exact(std::function<Rational(int)> fn) {
  Sequence s;
  s.exact_ = std::move(fn);
  s.real_ = [e = s.exact_](int n) { return to_double(e(n)); };
  return s;
}

Sequence Sequence::real(std::function<double(int)> fn) {
  Sequence s;
  s.real_ = std::move(fn);
  return s;
}

double Sequence::operator()(int n) const { return real_(n); }

Rational Sequence::exact_at(int n) const {
  if (!exact_) throw ConstraintError("parameter sequence has no exact rational form");
  return exact_(n);
}

AlphaSequences AlphaSequences::constant(const Rational& a0) {
  return {Sequence::constant(a0), Sequence::constant(1 - 2 * a0), to_double(a0)};
}

AlphaSequences AlphaSequences::standard() {
  return {Sequence::exact([](int n) { return Rational(n - 1, 2 * n); }),
          Sequence::exact([](int n) { return Rational(1, n); }), 0.5};
}

AlphaSequences AlphaSequences::classical() { return constant(Rational(1)); }

AlphaSequences AlphaSequences::nonpositive_example() {
  return {Sequence::exact([](int n) { return Rational(-1, n); }),
          Sequence::exact([](int n) { return 1 + Rational(2, n); }), 0.0};
}

BetaGammaSequences BetaGammaSequences::from_free(Sequence beta0, Sequence beta2) {
  BetaGammaSequences s{beta0, {}, beta2, {}};
  if (beta0.has_exact() && beta2.has_exact()) {
    s.beta1 = Sequence::exact([beta0, beta2](int n) { return 1 - 2 * beta0.exact_at(n) - beta2.exact_at(n); });
    s.gamma0 = Sequence::exact([beta2](int n) { return 2 * beta2.exact_at(n); });
  } else {
    s.beta1 = Sequence::real([beta0, beta2](int n) { return 1.0 - 2.0 * beta0(n) - beta2(n); });
    s.gamma0 = Sequence::real([beta2](int n) { return 2.0 * beta2(n); });
  }
  return s;
}

BetaGammaSequences BetaGammaSequences::tilde2() {
  return {Sequence::constant(1), Sequence::exact([](int n) { return Rational(-n - 1); }),
          Sequence::exact([](int n) { return Rational(n); }), Sequence::exact([](int n) { return Rational(2 * n); })};
}

BetaGammaSequences BetaGammaSequences::classical() {
  return {Sequence::constant(1), Sequence::constant(-2), Sequence::constant(1), Sequence::constant(2)};
}

std::array<Rational, 5> TildeU3Coefficients::beta(int n) {
  const Rational m(n);
  return {Rational(1), -4 - Rational(4, 3) * m, 5 + Rational(10, 3) * m + m * m / 2, -m * m - 2 * m - 2,
          m * m / 2};
}

std::array<Rational, 5> TildeU3Coefficients::gamma(int n) {
  const Rational m(n);
  return {Rational(0), 4 + Rational(7, 3) * m, -Rational(19, 3) * m - 2 * m * m - 8, 4 * m * m + 4 * m + 4,
          -2 * m * m};
}

Rational TildeU3Coefficients::delta0(int n) { return Rational(3 * n) * n; }

// ---------------------------------------------------------------------------
// Families

FamilyKind kind_of(const Family& family) { return static_cast<FamilyKind>(family.index()); }

std::string family_name(FamilyKind kind) {
  switch (kind) {
  case FamilyKind::ClassicalGenuine:
    return "classical";
  case FamilyKind::Modified1:
    return "modified1";
  case FamilyKind::General2:
    return "general2";
  case FamilyKind::Tilde2:
    return "tilde2";
  case FamilyKind::Tilde3:
    return "tilde3";
  }
  return "unknown";
}

int minimum_degree(FamilyKind kind) { return kind == FamilyKind::Tilde3 ? 5 : 2; }

namespace {

constexpr double constraint_tolerance = 1e-12;

template <typename T> Blend<T> alpha_blend(const T& a0, const T& a1) {
  const Polynomial<T> alpha{a0, a1};
  return {1, {alpha, alpha.reflected()}};
}

template <typename T> Blend<T> beta_gamma_blend(const T& b0, const T& b1, const T& b2, const T& g0) {
  const Polynomial<T> beta{b0, b1, b2};
  const Polynomial<T> gamma{T(0), g0, T(-g0)};
  return {2, {beta, gamma, beta.reflected()}};
}

template <typename T> Blend<T> tilde3_blend(int n) {
  const auto b = TildeU3Coefficients::beta(n);
  const auto g = TildeU3Coefficients::gamma(n);
  const Rational d0 = TildeU3Coefficients::delta0(n);
  auto conv = [](const Rational& r) {
    if constexpr (std::is_same_v<T, Rational>)
      return r;
    else
      return to_double(r);
  };
  const Polynomial<T> beta{conv(b[0]), conv(b[1]), conv(b[2]), conv(b[3]), conv(b[4])};
  const Polynomial<T> gamma{conv(g[0]), conv(g[1]), conv(g[2]), conv(g[3]), conv(g[4])};
  const Polynomial<T> delta{T(0), T(0), conv(d0), conv(Rational(-2 * d0)), conv(d0)};
  return {4, {beta, gamma, delta, gamma.reflected(), beta.reflected()}};
}

void check_unit(const Rational& value, const std::string& what) {
  if (value != 1) throw ConstraintError(what + " = " + to_string(value) + ", expected 1");
}
void check_zero(const Rational& value, const std::string& what) {
  if (value != 0) throw ConstraintError(what + " = " + to_string(value) + ", expected 0");
}
void check_close(double value, double target, const std::string& what) {
  if (!(std::abs(value - target) <= constraint_tolerance))
    throw ConstraintError(what + " = " + std::to_string(value) + ", expected " + std::to_string(target));
}

} // namespace

OperatorSpec::OperatorSpec(Family family, int n) : family_(std::move(family)), n_(n) {
  const FamilyKind kind = kind_of(family_);
  if (n_ < minimum_degree(kind))
    throw ConstraintError(family_name(kind) + " needs n >= " + std::to_string(minimum_degree(kind)) +
                          ", got n = " + std::to_string(n_));

  switch (kind) {
  case FamilyKind::ClassicalGenuine:
    blend_ = {0, {Polynomial<double>{1.0}}};
    exact_blend_ = Blend<Rational>{0, {Polynomial<Rational>{Rational(1)}}};
    break;
  case FamilyKind::Modified1: {
    const auto& a = std::get<Modified1>(family_).alpha;
    if (a.alpha0.has_exact() && a.alpha1.has_exact()) {
      const Rational a0 = a.alpha0.exact_at(n_), a1 = a.alpha1.exact_at(n_);
      check_unit(2 * a0 + a1, "2 alpha0 + alpha1");
      exact_blend_ = alpha_blend(a0, a1);
      blend_ = alpha_blend(to_double(a0), to_double(a1));
    } else {
      const double a0 = a.alpha0(n_), a1 = a.alpha1(n_);
      check_close(2 * a0 + a1, 1.0, "2 alpha0 + alpha1");
      blend_ = alpha_blend(a0, a1);
    }
    break;
  }
  case FamilyKind::General2:
  case FamilyKind::Tilde2: {
    const BetaGammaSequences s = kind == FamilyKind::Tilde2 ? BetaGammaSequences::tilde2()
                                                            : std::get<General2>(family_).sequences;
    if (s.beta0.has_exact() && s.beta1.has_exact() && s.beta2.has_exact() && s.gamma0.has_exact()) {
      const Rational b0 = s.beta0.exact_at(n_), b1 = s.beta1.exact_at(n_), b2 = s.beta2.exact_at(n_),
                     g0 = s.gamma0.exact_at(n_);
      check_zero(2 * b2 - g0, "2 beta2 - gamma0");
      check_unit(2 * b0 + b1 + b2, "2 beta0 + beta1 + beta2");
      exact_blend_ = beta_gamma_blend(b0, b1, b2, g0);
      blend_ = beta_gamma_blend(to_double(b0), to_double(b1), to_double(b2), to_double(g0));
    } else {
      const double b0 = s.beta0(n_), b1 = s.beta1(n_), b2 = s.beta2(n_), g0 = s.gamma0(n_);
      check_close(2 * b2 - g0, 0.0, "2 beta2 - gamma0");
      check_close(2 * b0 + b1 + b2, 1.0, "2 beta0 + beta1 + beta2");
      blend_ = beta_gamma_blend(b0, b1, b2, g0);
    }
    break;
  }
  case FamilyKind::Tilde3: {
    exact_blend_ = tilde3_blend<Rational>(n_);
    // beta(1,n) = gamma(1,n) = 0 make the interior terms vanish at x = 0.
    check_zero(exact_blend_->weights[0](Rational(1)), "beta(1,n)");
    check_zero(exact_blend_->weights[1](Rational(1)), "gamma(1,n)");
    blend_ = tilde3_blend<double>(n_);
    break;
  }
  }
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

void require_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("operator evaluated outside [0,1]: x = " + std::to_string(x));
}

void require_interior_index(const OperatorSpec& spec, int k) {
  if (k < 1 || k > spec.n() - 1)
    throw IndexError("blend index k = " + std::to_string(k) + " outside 1.." + std::to_string(spec.n() - 1));
}

template <typename T, typename Row>
T weight_from_row(const Blend<T>& blend, const Row& row, int k, const T& x) {
  const int m = static_cast<int>(row.size()) - 1;
  T w(0);
  for (int j = 0; j <= blend.offset; ++j) {
    const int i = k - j;
    if (i < 0 || i > m) continue;
    w += blend.weights[static_cast<std::size_t>(j)](x) * row[static_cast<std::size_t>(i)];
  }
  return w;
}

} // namespace

double blended_weight(const OperatorSpec& spec, int k, double x) {
  require_unit_interval(x);
  require_interior_index(spec, k);
  const auto& blend = spec.blend();
  return weight_from_row(blend, basis_row(spec.n() - blend.offset, x), k, x);
}

Rational blended_weight_exact(const OperatorSpec& spec, int k, const Rational& x) {
  if (x < 0 || x > 1) throw DomainError("operator evaluated outside [0,1]: x = " + to_string(x));
  require_interior_index(spec, k);
  if (!spec.exact_blend()) throw ConstraintError("operator parameters are not rational at n = " + std::to_string(spec.n()));
  const auto& blend = *spec.exact_blend();
  return weight_from_row(blend, basis_row_exact(spec.n() - blend.offset, x), k, x);
}

double blended_weight_u1(const OperatorSpec& spec, int k, double x) {
  if (spec.kind() != FamilyKind::Modified1)
    throw UnsupportedError("blended_weight_u1 needs the modified1 family, got " + family_name(spec.kind()));
  return blended_weight(spec, k, x);
}

namespace {

// Shared operator formula over T in {double, Rational}. `integrals[k-1]` holds
// int p_{n-2,k-1} f.
template <typename T, typename Row>
T evaluate(const Blend<T>& blend, int n, const Row& row, const std::vector<T>& integrals, const T& f0,
           const T& f1, const T& x, const T& x_pow, const T& y_pow) {
  const int d = blend.offset;
  const int m = n - d;
  T interior(0);
  for (int j = 0; j <= d; ++j) {
    T partial(0);
    // k = i + j must lie in [1, n-1].
    const int i_lo = std::max(0, 1 - j);
    const int i_hi = std::min(m, n - 1 - j);
    for (int i = i_lo; i <= i_hi; ++i)
      partial += row[static_cast<std::size_t>(i)] * integrals[static_cast<std::size_t>(i + j - 1)];
    interior += blend.weights[static_cast<std::size_t>(j)](x) * partial;
  }
  return blend.weights.front()(x) * y_pow * f0 + blend.weights.back()(x) * x_pow * f1 + T(n - 1) * interior;
}

} // namespace

Approximant::Approximant(OperatorSpec spec, const TestFunction& f)
    : Approximant(spec, f, make_plan(spec.n() - 2, f)) {}

Approximant::Approximant(OperatorSpec spec, const TestFunction& f, const QuadraturePlan& plan)
    : spec_(std::move(spec)), integrals_(kernels::basis_integrals(plan, spec_.n() - 2, f)), f0_(f(0.0)),
      f1_(f(1.0)) {}

double Approximant::operator()(double x) const {
  require_unit_interval(x);
  const auto& blend = spec_.blend();
  const int m = spec_.n() - blend.offset;
  const double x_pow = std::pow(x, m);
  const double y_pow = std::pow(1.0 - x, m);
  return evaluate(blend, spec_.n(), basis_row(m, x), integrals_, f0_, f1_, x, x_pow, y_pow);
}

double apply(const OperatorSpec& spec, const TestFunction& f, double x) {
  require_unit_interval(x);
  return Approximant(spec, f)(x);
}

Rational apply_exact(const OperatorSpec& spec, const Polynomial<Rational>& f, const Rational& x) {
  if (x < 0 || x > 1) throw DomainError("operator evaluated outside [0,1]: x = " + to_string(x));
  if (!spec.exact_blend())
    throw ConstraintError("operator parameters are not rational at n = " + std::to_string(spec.n()));
  const auto& blend = *spec.exact_blend();
  const int n = spec.n();
  const int m = n - blend.offset;
  std::vector<Rational> integrals;
  integrals.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 1; k <= n - 1; ++k) integrals.push_back(integrate_against_basis_exact(n - 2, k - 1, f));
  const Rational x_pow = power(x, static_cast<unsigned>(m));
  const Rational y_pow = power(Rational(1 - x), static_cast<unsigned>(m));
  return evaluate(blend, n, basis_row_exact(m, x), integrals, f(Rational(0)), f(Rational(1)), x, x_pow, y_pow);
}

Rational apply_exact(const OperatorSpec& spec, const TestFunction& f, const Rational& x) {
  if (!f.is_polynomial()) throw UnsupportedError("exact evaluation needs a polynomial, got " + f.name());
  return apply_exact(spec, f.exact_polynomial(), x);
}

bool is_positive(const OperatorSpec& spec) {
  if (spec.kind() != FamilyKind::Modified1)
    throw UnsupportedError("positivity classification is defined for modified1 only, got " + family_name(spec.kind()));
  const auto& a = std::get<Modified1>(spec.family()).alpha;
  const int n = spec.n();
  if (a.alpha0.has_exact() && a.alpha1.has_exact()) {
    const Rational a0 = a.alpha0.exact_at(n);
    return a0 >= 0 && a0 + a.alpha1.exact_at(n) >= 0;
  }
  const double a0 = a.alpha0(n);
  return a0 >= 0.0 && a0 + a.alpha1(n) >= 0.0;
}

} // namespace gbd
