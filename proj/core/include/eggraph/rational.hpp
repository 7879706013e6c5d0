#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace eggraph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", an integer, or a decimal literal ("-0.45", "1.5e-2") into an
/// exact fraction. Decimal digits are never routed through binary floating point.
/// Throws InvalidArgument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rational& value);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

double to_double(const Rational& value);

/// Smallest integer strictly greater than `value`.
BigInt floor_plus_one(const Rational& value);
/// Largest integer strictly less than `value`.
BigInt ceil_minus_one(const Rational& value);
BigInt ceil(const Rational& value);

}  // namespace eggraph
