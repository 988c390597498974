#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ftcost {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Nearest integer, ties rounded towards +infinity.
BigInt round_half_up(const Rational& value);

BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);

bool is_integral(const Rational& value);

/// Parses a decimal literal ("2e-5", "0.01", "1E14", "-3.5") into an exact rational.
/// Throws DomainError on anything else.
Rational rational_from_decimal(std::string_view text);

/// Exact rational of the shortest decimal representation that round-trips `value`,
/// so 2e-5 becomes 1/50000 rather than the binary approximation.
Rational rational_from_double(double value);

long double to_long_double(const Rational& value);
long double to_long_double(const BigInt& value);

/// `value` rounded half-up to `decimals` places, as a string ("1.16").
std::string format_fixed(const Rational& value, int decimals);

/// "%.6g"-style formatting with the given number of significant digits.
std::string format_sig(long double value, int digits = 6);

/// Exact integer in full when integral, otherwise `format_sig`.
std::string format_count(const Rational& value, int digits = 6);

Rational pow(const Rational& base, unsigned exponent);
BigInt pow(const BigInt& base, unsigned exponent);

}  // namespace ftcost
