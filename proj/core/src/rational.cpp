#include "eggraph/rational.hpp"

#include "eggraph/error.hpp"

#include <cctype>
#include <string>

namespace eggraph {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// Boost reads a leading 0 as an octal prefix.
BigInt decimal_digits(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return BigInt{std::string(digits.substr(first))};
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw InvalidArgument("not a number: '" + std::string(whole) + "'");
  BigInt value = decimal_digits(s);
  if (negative) value = -value;
  return value;
}

BigInt pow10(std::size_t exponent) {
  BigInt result = 1;
  for (std::size_t i = 0; i < exponent; ++i) result *= 10;
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("empty number");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(text.substr(0, slash), whole);
    const BigInt den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(whole) + "'");
    return Rational(num, den);
  }

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const BigInt exp = parse_integer(text.substr(e + 1), whole);
    if (exp > 1000 || exp < -1000) throw InvalidArgument("exponent out of range in '" + std::string(whole) + "'");
    exponent = exp.convert_to<long>();
    text = text.substr(0, e);
  }

  std::string_view int_part = text;
  std::string_view frac_part;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw InvalidArgument("not a number: '" + std::string(whole) + "'");
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
    throw InvalidArgument("not a number: '" + std::string(whole) + "'");
  }

  const std::string digits = std::string(int_part) + std::string(frac_part);
  BigInt num = decimal_digits(digits);
  if (negative) num = -num;
  exponent -= static_cast<long>(frac_part.size());
  if (exponent >= 0) return Rational(num * pow10(static_cast<std::size_t>(exponent)));
  return Rational(num, pow10(static_cast<std::size_t>(-exponent)));
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

BigInt ceil(const Rational& value) {
  const BigInt& num = numerator(value);
  const BigInt& den = denominator(value);  // always positive
  BigInt q = num / den;                    // truncates toward zero
  if (q * den != num && num > 0) ++q;
  return q;
}

BigInt floor_plus_one(const Rational& value) {
  const BigInt& num = numerator(value);
  const BigInt& den = denominator(value);
  BigInt q = num / den;
  if (q * den != num && num < 0) --q;  // floor
  return q + 1;
}

BigInt ceil_minus_one(const Rational& value) { return ceil(value) - 1; }

}  // namespace eggraph
