#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace listcrit {

// Exact arithmetic everywhere; no floating point enters any computation path.
using BigInt = boost::multiprecision::number<boost::multiprecision::backends::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// "num/den" with the denominator omitted when it is 1, e.g. "93/766", "-2".
std::string to_fraction_string(const Rational& x);

/// Parses "a" or "a/b". Returns nullopt on malformed input or zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

/// Decimal string truncated toward zero to `digits` places (never rounded).
std::string to_decimal_truncated(const Rational& x, int digits);

/// trunc(x * 10^digits) toward zero, as an exact integer.
BigInt truncated_scaled(const Rational& x, int digits);

double to_double(const Rational& x);

}  // namespace listcrit
