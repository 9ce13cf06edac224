#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace bendix {

// Expression templates are disabled so the types compose cleanly with Eigen.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/**
 * Parses "p/q", "-p/q" or a bare integer. The denominator must be positive;
 * the value is stored reduced. Throws Error(ParseError) otherwise.
 */
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline Integer numerator(const Rational& value) {
  return boost::multiprecision::numerator(value);
}
inline Integer denominator(const Rational& value) {
  return boost::multiprecision::denominator(value);
}

/// Smallest integer greater than or equal to value.
Integer ceil(const Rational& value);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace bendix
