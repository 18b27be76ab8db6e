#include "gbd/basis.hpp"

#include "gbd/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gbd {

namespace {

void require_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw DomainError("Bernstein basis evaluated outside [0,1]: x = " + std::to_string(x));
}

void require_unit_interval(const Rational& x) {
  if (x < 0 || x > 1) throw DomainError("Bernstein basis evaluated outside [0,1]: x = " + to_string(x));
}

// Mantissa/exponent accumulator in extended precision. Keeps the running
// product in [0.5, 1) so that C(n,k) and tiny powers never leave the range.
struct ScaledProduct {
  long double mantissa = 1.0L;
  long exponent = 0;

  void normalize() {
    int e = 0;
    mantissa = std::frexp(mantissa, &e);
    exponent += e;
  }
  void times(long double factor) {
    mantissa *= factor;
    normalize();
  }
  void times_power(long double base, int power) {
    if (power == 0) return;
    int e = 0;
    const long double m = std::frexp(base, &e);
    // m in [0.5,1): m^power >= 2^-power stays inside the long double range.
    mantissa *= std::pow(m, static_cast<long double>(power));
    exponent += static_cast<long>(e) * power;
    normalize();
  }
  double value() const {
    if (exponent < -20000) return 0.0;
    return static_cast<double>(std::ldexp(mantissa, static_cast<int>(exponent)));
  }
};

} // namespace

double eval_basis(BernsteinIndex idx, double x) {
  require_unit_interval(x);
  const int n = idx.n;
  const int k = idx.k;
  if (!idx.in_range()) return 0.0;
  if (x == 0.0) return k == 0 ? 1.0 : 0.0;
  if (x == 1.0) return k == n ? 1.0 : 0.0;

  ScaledProduct acc;
  const int kk = std::min(k, n - k);
  for (int i = 1; i <= kk; ++i)
    acc.times(static_cast<long double>(n - kk + i) / static_cast<long double>(i));
  const long double xl = x;
  acc.times_power(xl, k);
  acc.times_power(1.0L - xl, n - k);
  return acc.value();
}

std::vector<double> basis_row(int n, double x) {
  require_unit_interval(x);
  std::vector<double> row(static_cast<std::size_t>(std::max(n, 0)) + 1, 0.0);
  if (n < 0) return {};
  if (x == 0.0) {
    row.front() = 1.0;
    return row;
  }
  if (x == 1.0) {
    row.back() = 1.0;
    return row;
  }
  const int mode = std::clamp(static_cast<int>(std::floor((n + 1) * x)), 0, n);
  const long double up = static_cast<long double>(x) / (1.0L - static_cast<long double>(x));
  const long double down = 1.0L / up;

  const long double at_mode = eval_basis({n, mode}, x);
  row[static_cast<std::size_t>(mode)] = static_cast<double>(at_mode);
  long double p = at_mode;
  for (int k = mode; k < n && p != 0.0L; ++k) {
    p *= up * static_cast<long double>(n - k) / static_cast<long double>(k + 1);
    row[static_cast<std::size_t>(k + 1)] = static_cast<double>(p);
  }
  p = at_mode;
  for (int k = mode; k > 0 && p != 0.0L; --k) {
    p *= down * static_cast<long double>(k) / static_cast<long double>(n - k + 1);
    row[static_cast<std::size_t>(k - 1)] = static_cast<double>(p);
  }
  return row;
}

Rational eval_basis_exact(BernsteinIndex idx, const Rational& x) {
  require_unit_interval(x);
  if (!idx.in_range()) return Rational(0);
  const Rational one_minus_x = 1 - x;
  return Rational(binomial(idx.n, idx.k)) * power(x, static_cast<unsigned>(idx.k)) *
         power(one_minus_x, static_cast<unsigned>(idx.n - idx.k));
}

std::vector<Rational> basis_row_exact(int n, const Rational& x) {
  require_unit_interval(x);
  std::vector<Rational> row;
  if (n < 0) return row;
  row.reserve(static_cast<std::size_t>(n) + 1);
  // Powers of x and 1-x built once and reused across the row.
  std::vector<Rational> xp(static_cast<std::size_t>(n) + 1), yp(static_cast<std::size_t>(n) + 1);
  xp[0] = 1;
  yp[0] = 1;
  const Rational y = 1 - x;
  for (int i = 1; i <= n; ++i) {
    xp[static_cast<std::size_t>(i)] = xp[static_cast<std::size_t>(i - 1)] * x;
    yp[static_cast<std::size_t>(i)] = yp[static_cast<std::size_t>(i - 1)] * y;
  }
  BigInt c = 1;
  for (int k = 0; k <= n; ++k) {
    row.push_back(Rational(c) * xp[static_cast<std::size_t>(k)] * yp[static_cast<std::size_t>(n - k)]);
    c = c * (n - k) / (k + 1);
  }
  return row;
}

Rational basis_monomial_integral(int m, int j, int s) {
  if (m < 0 || j < 0 || j > m)
    throw DomainError("basis index out of range: m = " + std::to_string(m) + ", j = " + std::to_string(j));
  if (s < 0) throw DomainError("negative monomial power: " + std::to_string(s));
  Rational r(1, m + 1);
  for (int i = 1; i <= s; ++i) r *= Rational(j + i, m + 1 + i);
  return r;
}

} // namespace gbd
