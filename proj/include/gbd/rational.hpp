#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace gbd {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

double to_double(const Rational& r);

/// Parses "p/q", an integer, or a decimal literal such as "0.45" or "1.5e-3"
/// into an exact rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

/// r^e for e >= 0.
Rational power(const Rational& r, unsigned e);

/// Exact binomial coefficient; zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

} // namespace gbd
