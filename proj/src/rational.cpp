#include "gbd/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gbd {

double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty())
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  BigInt v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

BigInt pow10(long e) {
  BigInt p = 1;
  for (long i = 0; i < e; ++i) p *= 10;
  return p;
}

} // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), whole);
    BigInt den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      exponent = static_cast<long>(parse_integer(exp_text, whole));
      if (exp_negative) exponent = -exponent;
      text = text.substr(0, e);
    }
    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      int_part = text.substr(0, dot);
      frac_part = text.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty())
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    BigInt mantissa = int_part.empty() ? BigInt(0) : parse_integer(int_part, whole);
    if (!frac_part.empty()) mantissa = mantissa * pow10(static_cast<long>(frac_part.size())) +
                                       parse_integer(frac_part, whole);
    exponent -= static_cast<long>(frac_part.size());
    value = exponent >= 0 ? Rational(mantissa * pow10(exponent)) : Rational(mantissa, pow10(-exponent));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational power(const Rational& r, unsigned e) {
  const BigInt num = boost::multiprecision::pow(boost::multiprecision::numerator(r), e);
  const BigInt den = boost::multiprecision::pow(boost::multiprecision::denominator(r), e);
  return Rational(num, den);
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

} // namespace gbd
