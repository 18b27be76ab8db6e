#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace gbd {

/// Dense univariate polynomial with ascending coefficients c0 + c1 x + ...
template <typename T> class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial monomial(int k, T scale = T(1)) {
    std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
    c.back() = scale;
    return Polynomial(std::move(c));
  }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coefficients() const { return coeffs_; }
  T coefficient(int i) const {
    return (i >= 0 && i <= degree()) ? coeffs_[static_cast<std::size_t>(i)] : T(0);
  }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<T> c(std::max(coeffs_.size(), o.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Polynomial(std::move(c));
  }

  Polynomial operator*(const Polynomial& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return {};
    std::vector<T> c(coeffs_.size() + o.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(c));
  }

  Polynomial operator*(const T& s) const {
    std::vector<T> c(coeffs_);
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
  }

  /// p(1 - x) as a polynomial in x.
  Polynomial reflected() const {
    const Polynomial one_minus_x{T(1), T(-1)};
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * one_minus_x + Polynomial{*it};
    return acc;
  }

  template <typename U, typename Convert> Polynomial<U> map(Convert&& convert) const {
    std::vector<U> c;
    c.reserve(coeffs_.size());
    for (const auto& v : coeffs_) c.push_back(convert(v));
    return Polynomial<U>(std::move(c));
  }

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

} // namespace gbd
