#include "gbd/moments.hpp"

#include "gbd/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gbd {

std::vector<Rational> moments_exact(const OperatorSpec& spec, int max_order, const Rational& x) {
  std::vector<Rational> m;
  m.reserve(static_cast<std::size_t>(max_order) + 1);
  for (int j = 0; j <= max_order; ++j) m.push_back(apply_exact(spec, Polynomial<Rational>::monomial(j), x));
  return m;
}

Rational central_moment_from_moments(std::span<const Rational> moments, int k, const Rational& x) {
  if (k < 0 || static_cast<std::size_t>(k) >= moments.size())
    throw std::invalid_argument("central moment order exceeds available moments");
  Rational sum = 0;
  Rational neg_x_pow = 1; // (-x)^(k-j), built from j = k downwards
  for (int j = k; j >= 0; --j) {
    sum += Rational(binomial(k, j)) * neg_x_pow * moments[static_cast<std::size_t>(j)];
    neg_x_pow *= -x;
  }
  return sum;
}

Rational central_moment_exact(const OperatorSpec& spec, int k, const Rational& x) {
  const auto m = moments_exact(spec, k, x);
  return central_moment_from_moments(m, k, x);
}

// ---------------------------------------------------------------------------

std::string lemma_name(Lemma lemma) {
  switch (lemma) {
  case Lemma::U1Moments:
    return "u1-moments";
  case Lemma::U1CentralMoments:
    return "u1-central";
  case Lemma::Tilde2Moments:
    return "tilde2-moments";
  case Lemma::Tilde2CentralMoments:
    return "tilde2-central";
  case Lemma::Tilde3CentralMoments:
    return "tilde3-central";
  }
  return "unknown";
}

Lemma parse_lemma(const std::string& name) {
  for (Lemma l : {Lemma::U1Moments, Lemma::U1CentralMoments, Lemma::Tilde2Moments, Lemma::Tilde2CentralMoments,
                  Lemma::Tilde3CentralMoments})
    if (lemma_name(l) == name) return l;
  throw std::invalid_argument("unknown lemma '" + name + "'");
}

FamilyKind lemma_family(Lemma lemma) {
  switch (lemma) {
  case Lemma::U1Moments:
  case Lemma::U1CentralMoments:
    return FamilyKind::Modified1;
  case Lemma::Tilde2Moments:
  case Lemma::Tilde2CentralMoments:
    return FamilyKind::Tilde2;
  case Lemma::Tilde3CentralMoments:
    return FamilyKind::Tilde3;
  }
  return FamilyKind::ClassicalGenuine;
}

std::vector<int> lemma_orders(Lemma lemma) {
  switch (lemma) {
  case Lemma::U1Moments:
  case Lemma::Tilde2Moments:
    return {0, 1, 2};
  case Lemma::U1CentralMoments:
    return {1, 2, 4};
  case Lemma::Tilde2CentralMoments:
    return {2, 3};
  case Lemma::Tilde3CentralMoments:
    return {1, 2, 3};
  }
  return {};
}

bool lemma_is_central(Lemma lemma) {
  return lemma == Lemma::U1CentralMoments || lemma == Lemma::Tilde2CentralMoments ||
         lemma == Lemma::Tilde3CentralMoments;
}

Rational lemma_closed_form(Lemma lemma, int n, const Rational& alpha0, int order, const Rational& x) {
  switch (lemma) {
  case Lemma::U1Moments:
    return moment_u1_closed<Rational>(n, alpha0, order, x);
  case Lemma::U1CentralMoments:
    return central_moment_u1_closed<Rational>(n, alpha0, order, x);
  case Lemma::Tilde2Moments:
    return moment_tilde2_closed<Rational>(n, order, x);
  case Lemma::Tilde2CentralMoments:
    return central_moment_tilde2_closed<Rational>(n, order, x);
  case Lemma::Tilde3CentralMoments:
    return central_moment_tilde3_closed<Rational>(n, order, x);
  }
  throw UnsupportedError("unknown lemma");
}

namespace {

Family family_for(FamilyKind kind, const AlphaSequences& alpha) {
  switch (kind) {
  case FamilyKind::Modified1:
    return Modified1{alpha};
  case FamilyKind::Tilde2:
    return Tilde2{};
  case FamilyKind::Tilde3:
    return Tilde3{};
  default:
    throw UnsupportedError("no lemma for family " + family_name(kind));
  }
}

} // namespace

std::vector<MomentReport> verify_lemma(Lemma lemma, std::span<const int> ns, std::span<const Rational> xs,
                                       const AlphaSequences& alpha) {
  const FamilyKind kind = lemma_family(lemma);
  const auto orders = lemma_orders(lemma);
  const int max_order = *std::max_element(orders.begin(), orders.end());
  const bool central = lemma_is_central(lemma);
  for (const auto& x : xs)
    if (x < 0 || x > 1) throw DomainError("lemma verification point outside [0,1]: " + to_string(x));

  // Constructing every spec up front surfaces constraint errors before any
  // parallel work starts.
  std::vector<OperatorSpec> specs;
  for (int n : ns) specs.emplace_back(family_for(kind, alpha), n);

  const std::size_t per_n = xs.size() * orders.size();
  std::vector<MomentReport> reports(ns.size() * per_n);

#pragma omp parallel for schedule(dynamic) collapse(2)
  for (std::ptrdiff_t in = 0; in < static_cast<std::ptrdiff_t>(ns.size()); ++in) {
    for (std::ptrdiff_t ix = 0; ix < static_cast<std::ptrdiff_t>(xs.size()); ++ix) {
      const auto& spec = specs[static_cast<std::size_t>(in)];
      const Rational& x = xs[static_cast<std::size_t>(ix)];
      const int n = spec.n();
      const Rational alpha0 = kind == FamilyKind::Modified1 ? alpha.alpha0.exact_at(n) : Rational(0);
      const auto m = moments_exact(spec, max_order, x);
      for (std::size_t io = 0; io < orders.size(); ++io) {
        const int k = orders[io];
        const Rational oracle = central ? central_moment_from_moments(m, k, x) : m[static_cast<std::size_t>(k)];
        const Rational closed = lemma_closed_form(lemma, n, alpha0, k, x);
        MomentReport r;
        r.family = kind;
        r.n = n;
        r.x = x;
        r.order = k;
        r.central = central;
        r.closed_form = to_double(closed);
        r.oracle = to_double(oracle);
        const Rational gap = closed - oracle;
        r.abs_gap = std::abs(to_double(gap));
        r.exact_path = true;
        r.exact_match = gap == 0;
        reports[static_cast<std::size_t>(in) * per_n + static_cast<std::size_t>(ix) * orders.size() + io] = r;
      }
    }
  }
  return reports;
}

RemainderCheck remainder_check(FamilyKind family, int order, const Rational& x, std::span<const int> ns,
                               int exponent) {
  if (family != FamilyKind::Tilde2 && family != FamilyKind::Tilde3)
    throw UnsupportedError("remainder checks exist for tilde2 and tilde3 only");
  if (order < 4 || order > 6) throw UnsupportedError("remainder checks cover orders 4..6");
  RemainderCheck check;
  check.family = family;
  check.order = order;
  check.exponent = exponent;
  check.ns.assign(ns.begin(), ns.end());
  check.oracle.resize(ns.size());
  check.leading.resize(ns.size());
  check.scaled_gap.resize(ns.size());

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(ns.size()); ++i) {
    const int n = ns[static_cast<std::size_t>(i)];
    const OperatorSpec spec(family == FamilyKind::Tilde2 ? Family{Tilde2{}} : Family{Tilde3{}}, n);
    const Rational oracle = central_moment_exact(spec, order, x);
    const Rational leading = family == FamilyKind::Tilde2 ? central_moment_tilde2_closed<Rational>(n, order, x)
                                                          : central_moment_tilde3_closed<Rational>(n, order, x);
    Rational gap = oracle - leading;
    if (gap < 0) gap = -gap;
    const auto idx = static_cast<std::size_t>(i);
    check.oracle[idx] = to_double(oracle);
    check.leading[idx] = to_double(leading);
    check.scaled_gap[idx] = to_double(gap * power(Rational(n), static_cast<unsigned>(exponent)));
  }

  const auto [lo, hi] = std::minmax_element(check.scaled_gap.begin(), check.scaled_gap.end());
  check.ratio = *lo > 0.0 ? *hi / *lo : std::numeric_limits<double>::infinity();
  return check;
}

double central_moment_decay_rate(FamilyKind family, int order, const Rational& x, std::span<const int> ns) {
  std::vector<double> log_n, log_mu;
  for (int n : ns) {
    const OperatorSpec spec(family == FamilyKind::Tilde2   ? Family{Tilde2{}}
                            : family == FamilyKind::Tilde3 ? Family{Tilde3{}}
                                                           : Family{ClassicalGenuine{}},
                            n);
    const double mu = std::abs(to_double(central_moment_exact(spec, order, x)));
    if (mu == 0.0) continue;
    log_n.push_back(std::log(static_cast<double>(n)));
    log_mu.push_back(std::log(mu));
  }
  return least_squares_line(log_n, log_mu).slope;
}

} // namespace gbd
