#include "bendix/rational.hpp"

#include <cctype>

#include "bendix/error.hpp"

namespace bendix {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text, true)) {
      throw Error(ErrorCode::ParseError, "not a rational number", std::string(text));
    }
    return Rational(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw Error(ErrorCode::ParseError, "not a rational number", std::string(text));
  }
  const Integer d = parse_integer(den);
  if (d == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator", std::string(text));
  }
  return Rational(parse_integer(num), d);
}

std::string to_string(const Rational& value) {
  const Integer d = denominator(value);
  if (d == 1) return numerator(value).str();
  return numerator(value).str() + "/" + d.str();
}

Integer ceil(const Rational& value) {
  const Integer n = numerator(value);
  const Integer d = denominator(value);
  Integer q = n / d;  // truncates toward zero
  if (q * d != n && n > 0) q += 1;
  return q;
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return Integer(0);
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

}  // namespace bendix
