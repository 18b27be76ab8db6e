#pragma once

#include "gbd/rational.hpp"

#include <vector>

namespace gbd {

/// Bernstein fundamental polynomial p_{n,k}(x) = C(n,k) x^k (1-x)^(n-k).
/// k outside [0, n] denotes the zero polynomial.
struct BernsteinIndex {
  int n = 0;
  int k = 0;

  bool in_range() const { return n >= 0 && k >= 0 && k <= n; }
};

/// Floating-point p_{n,k}(x). The binomial and power factors are accumulated
/// with exponent rescaling so that neither overflow nor premature underflow
/// occurs for large n. Throws DomainError unless 0 <= x <= 1.
double eval_basis(BernsteinIndex idx, double x);

/// All of p_{n,0}(x), ..., p_{n,n}(x). Walks outward from the mode with the
/// ratio recurrence, so the cost is O(n) per row.
std::vector<double> basis_row(int n, double x);

/// Exact p_{n,k}(x) for rational x in [0,1].
Rational eval_basis_exact(BernsteinIndex idx, const Rational& x);

std::vector<Rational> basis_row_exact(int n, const Rational& x);

/// Exact Beta integral of p_{m,j}(t) t^s over [0,1]:
///   C(m,j) (j+s)! (m-j)! / (m+s+1)!  =  1/(m+1) * prod_{i=1..s} (j+i)/(m+1+i).
/// Throws DomainError unless 0 <= j <= m and s >= 0.
Rational basis_monomial_integral(int m, int j, int s);

} // namespace gbd
