#include "ftcost/numeric.hpp"

#include "ftcost/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

namespace ftcost {

BigInt floor(const Rational& value)
{
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    BigInt q = num / den;  // truncates towards zero
    if (num % den != 0 && num < 0) {
        q -= 1;
    }
    return q;
}

BigInt ceil(const Rational& value)
{
    return -floor(-value);
}

BigInt round_half_up(const Rational& value)
{
    return floor(value + Rational(1, 2));
}

bool is_integral(const Rational& value)
{
    return boost::multiprecision::denominator(value) == 1;
}

Rational rational_from_decimal(std::string_view text)
{
    std::size_t pos = 0;
    auto fail = [&]() -> Rational {
        throw DomainError("not a decimal number: '" + std::string(text) + "'");
    };
    if (text.empty()) {
        return fail();
    }
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    BigInt mantissa = 0;
    int scale = 0;
    bool any_digit = false;
    bool seen_point = false;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa = mantissa * 10 + (c - '0');
            any_digit = true;
            if (seen_point) {
                ++scale;
            }
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit) {
        return fail();
    }
    long exponent = 0;
    if (pos < text.size()) {
        if (text[pos] != 'e' && text[pos] != 'E') {
            return fail();
        }
        ++pos;
        const char* first = text.data() + pos;
        const char* last = text.data() + text.size();
        if (first != last && *first == '+') {
            ++first;
        }
        auto [ptr, ec] = std::from_chars(first, last, exponent);
        if (ec != std::errc() || ptr != last) {
            return fail();
        }
    }
    exponent -= scale;
    if (exponent < -4000 || exponent > 4000) {
        return fail();
    }
    Rational result(mantissa);
    const BigInt ten_power = pow(BigInt(10), static_cast<unsigned>(std::labs(exponent)));
    if (exponent >= 0) {
        result *= ten_power;
    } else {
        result /= ten_power;
    }
    return negative ? -result : result;
}

Rational rational_from_double(double value)
{
    if (!std::isfinite(value)) {
        throw DomainError("non-finite value has no rational form");
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) {
        throw DomainError("cannot format value");
    }
    return rational_from_decimal(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

long double to_long_double(const BigInt& value)
{
    return value.convert_to<long double>();
}

long double to_long_double(const Rational& value)
{
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return to_long_double(num);
    }
    // Scale so that both parts stay well inside long double range.
    const auto num_bits = num == 0 ? 0 : static_cast<long>(boost::multiprecision::msb(abs(num)));
    const auto den_bits = static_cast<long>(boost::multiprecision::msb(den));
    const long shift_num = num_bits > 16000 ? num_bits - 16000 : 0;
    const long shift_den = den_bits > 16000 ? den_bits - 16000 : 0;
    const long double n = to_long_double(BigInt(num >> shift_num));
    const long double d = to_long_double(BigInt(den >> shift_den));
    return std::ldexp(n / d, static_cast<int>(shift_num - shift_den));
}

std::string format_fixed(const Rational& value, int decimals)
{
    const BigInt scale = pow(BigInt(10), static_cast<unsigned>(decimals));
    BigInt scaled = round_half_up(value * scale);
    const bool negative = scaled < 0;
    if (negative) {
        scaled = -scaled;
    }
    std::string digits = scaled.str();
    if (decimals > 0) {
        if (digits.size() <= static_cast<std::size_t>(decimals)) {
            digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
        }
        digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
    }
    return negative ? "-" + digits : digits;
}

std::string format_sig(long double value, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*Lg", digits, value);
    return buf;
}

std::string format_count(const Rational& value, int digits)
{
    if (is_integral(value)) {
        return boost::multiprecision::numerator(value).str();
    }
    return format_sig(to_long_double(value), digits);
}

Rational pow(const Rational& base, unsigned exponent)
{
    Rational result = 1;
    Rational factor = base;
    while (exponent != 0) {
        if (exponent & 1U) {
            result *= factor;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            factor *= factor;
        }
    }
    return result;
}

BigInt pow(const BigInt& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

}  // namespace ftcost
