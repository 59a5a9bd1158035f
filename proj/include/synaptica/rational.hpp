#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace synaptica {

using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Exact conversion; every finite double is a dyadic rational.
inline Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  int exp = 0;
  double mant = std::frexp(x, &exp);
  // Shift the 53-bit mantissa into an integer.
  const double scaled = std::ldexp(mant, 53);
  Rational q{boost::multiprecision::cpp_int(static_cast<long long>(scaled))};
  exp -= 53;
  boost::multiprecision::cpp_int p = 1;
  if (exp > 0) {
    p <<= exp;
    return q * Rational(p);
  }
  p <<= -exp;
  return q / Rational(p);
}

namespace detail {

// cpp_int's string constructor reads a leading 0 as octal, so digits are
// accumulated by hand.
inline boost::multiprecision::cpp_int parse_decimal_int(const std::string& s,
                                                        const std::string& whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
  if (i == s.size()) throw std::invalid_argument("malformed rational '" + whole + "'");
  boost::multiprecision::cpp_int v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational '" + whole + "'");
    v = v * 10 + (s[i] - '0');
  }
  return negative ? boost::multiprecision::cpp_int(-v) : v;
}

}  // namespace detail

/// Parses "p/q", "p" or a decimal literal such as "0.25".
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    auto num = detail::parse_decimal_int(text.substr(0, slash), text);
    auto den = detail::parse_decimal_int(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(detail::parse_decimal_int(text, text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  boost::multiprecision::cpp_int den = 1;
  for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
  return Rational(detail::parse_decimal_int(digits, text), den);
}

}  // namespace synaptica
