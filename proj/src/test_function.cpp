#include "gbd/test_function.hpp"

#include "gbd/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gbd {

namespace {

constexpr double pi = std::numbers::pi;

Polynomial<Rational> derivative_of(const Polynomial<Rational>& p) {
  std::vector<Rational> c;
  for (int i = 1; i <= p.degree(); ++i) c.push_back(p.coefficient(i) * i);
  return Polynomial<Rational>(std::move(c));
}

} // namespace

TestFunction TestFunction::monomial(int k) {
  if (k < 0) throw std::invalid_argument("monomial power must be nonnegative");
  TestFunction f = polynomial(Polynomial<Rational>::monomial(k));
  f.kind_ = Kind::Monomial;
  f.name_ = "e" + std::to_string(k);
  return f;
}

TestFunction TestFunction::polynomial(Polynomial<Rational> p) {
  TestFunction f;
  f.kind_ = Kind::RationalPolynomial;
  f.name_ = "polynomial";
  f.approx_ = p.map<double>([](const Rational& c) { return to_double(c); });
  const auto p1 = derivative_of(p).map<double>([](const Rational& c) { return to_double(c); });
  const auto p2 = derivative_of(derivative_of(p)).map<double>([](const Rational& c) { return to_double(c); });
  f.exact_ = std::move(p);
  f.resolution_ = 0;
  auto approx = f.approx_;
  f.value_ = [approx](double x) { return approx(x); };
  f.d1_ = [p1](double x) { return p1(x); };
  f.d2_ = [p2](double x) { return p2(x); };
  return f;
}

TestFunction TestFunction::g1() {
  TestFunction f;
  f.kind_ = Kind::G1;
  f.name_ = "g1";
  f.value_ = [](double x) { return std::sin(4 * pi * x) + 4 * std::sin(pi * x / 4); };
  f.d1_ = [](double x) { return 4 * pi * std::cos(4 * pi * x) + pi * std::cos(pi * x / 4); };
  f.d2_ = [](double x) { return -16 * pi * pi * std::sin(4 * pi * x) - pi * pi / 4 * std::sin(pi * x / 4); };
  return f;
}

TestFunction TestFunction::g2() {
  TestFunction f;
  f.kind_ = Kind::G2;
  f.name_ = "g2";
  f.kinks_ = {0.25};
  f.value_ = [](double x) { return std::abs(x - 0.25) * std::cos(4 * pi * x); };
  f.d1_ = [](double x) {
    if (x == 0.25) throw DomainError("g2 is not differentiable at its kink x = 1/4");
    const double s = x > 0.25 ? 1.0 : -1.0;
    return s * (std::cos(4 * pi * x) - 4 * pi * (x - 0.25) * std::sin(4 * pi * x));
  };
  f.d2_ = [](double x) {
    if (x == 0.25) throw DomainError("g2 is not differentiable at its kink x = 1/4");
    const double s = x > 0.25 ? 1.0 : -1.0;
    return s * (-8 * pi * std::sin(4 * pi * x) - 16 * pi * pi * (x - 0.25) * std::cos(4 * pi * x));
  };
  return f;
}

TestFunction TestFunction::g3() {
  TestFunction f;
  f.kind_ = Kind::G3;
  f.name_ = "g3";
  f.value_ = [](double x) { return (x - 0.25) * std::sin(2 * pi * x); };
  f.d1_ = [](double x) { return std::sin(2 * pi * x) + 2 * pi * (x - 0.25) * std::cos(2 * pi * x); };
  f.d2_ = [](double x) {
    return 4 * pi * std::cos(2 * pi * x) - 4 * pi * pi * (x - 0.25) * std::sin(2 * pi * x);
  };
  return f;
}

TestFunction TestFunction::callable(std::string name, Fn fn, std::vector<double> kinks, Fn derivative1,
                                    Fn derivative2) {
  TestFunction f;
  f.kind_ = Kind::Callable;
  f.name_ = std::move(name);
  f.value_ = std::move(fn);
  f.kinks_ = std::move(kinks);
  f.d1_ = std::move(derivative1);
  f.d2_ = std::move(derivative2);
  return f;
}

TestFunction TestFunction::builtin(const std::string& name) {
  if (name == "g1") return g1();
  if (name == "g2") return g2();
  if (name == "g3") return g3();
  if (name.size() > 1 && name[0] == 'e') {
    try {
      std::size_t used = 0;
      const int k = std::stoi(name.substr(1), &used);
      if (used == name.size() - 1 && k >= 0) return monomial(k);
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument("unknown test function '" + name + "' (expected g1, g2, g3 or e<k>)");
}

double TestFunction::operator()(double x) const { return value_(x); }

double TestFunction::derivative(int order, double x) const {
  switch (order) {
  case 0:
    return value_(x);
  case 1:
    if (d1_) return d1_(x);
    break;
  case 2:
    if (d2_) return d2_(x);
    break;
  default:
    break;
  }
  throw UnsupportedError("derivative of order " + std::to_string(order) + " not available for " + name_);
}

} // namespace gbd
