#include "ftcost/errors.hpp"
#include "ftcost/numeric.hpp"

#include <doctest.h>

using namespace ftcost;

TEST_SUITE("numeric")
{
    TEST_CASE("round half up")
    {
        CHECK(round_half_up(Rational(5, 2)) == 3);
        CHECK(round_half_up(Rational(-5, 2)) == -2);
        CHECK(round_half_up(Rational(11368, 100)) == 114);
        CHECK(round_half_up(Rational(2730, 100)) == 27);
        CHECK(round_half_up(Rational(7)) == 7);
    }

    TEST_CASE("floor and ceil")
    {
        CHECK(floor(Rational(-1, 3)) == -1);
        CHECK(ceil(Rational(-1, 3)) == 0);
        CHECK(ceil(Rational(7, 3)) == 3);
        CHECK(floor(Rational(6, 3)) == 2);
    }

    TEST_CASE("decimal parsing is exact")
    {
        CHECK(rational_from_decimal("2e-5") == Rational(1, 50000));
        CHECK(rational_from_decimal("0.01") == Rational(1, 100));
        CHECK(rational_from_decimal("1E14") == Rational(BigInt("100000000000000")));
        CHECK(rational_from_decimal("-3.5") == Rational(-7, 2));
        CHECK(rational_from_decimal("+.5") == Rational(1, 2));
        CHECK(rational_from_decimal("1.16") == Rational(29, 25));
        CHECK_THROWS_AS(rational_from_decimal(""), DomainError);
        CHECK_THROWS_AS(rational_from_decimal("abc"), DomainError);
        CHECK_THROWS_AS(rational_from_decimal("1e"), DomainError);
        CHECK_THROWS_AS(rational_from_decimal("1.2.3"), DomainError);
    }

    TEST_CASE("doubles map to their shortest decimal")
    {
        CHECK(rational_from_double(2e-5) == Rational(1, 50000));
        CHECK(rational_from_double(0.1) == Rational(1, 10));
        CHECK(rational_from_double(1e14) == Rational(BigInt("100000000000000")));
    }

    TEST_CASE("formatting")
    {
        CHECK(format_fixed(Rational(29, 25), 2) == "1.16");
        CHECK(format_fixed(Rational(9, 8), 2) == "1.13");
        CHECK(format_fixed(Rational(1), 2) == "1.00");
        CHECK(format_fixed(Rational(1, 200), 2) == "0.01");
        CHECK(format_fixed(Rational(-1, 4), 1) == "-0.2");
        CHECK(format_sig(2.659691115L) == "2.65969");
        CHECK(format_count(Rational(BigInt("5842084772160"))) == "5842084772160");
        CHECK(format_count(Rational(1, 3)) == "0.333333");
    }

    TEST_CASE("long double conversion of huge rationals")
    {
        const Rational big = pow(Rational(294), 4000) / pow(Rational(293), 4000);
        const long double expected = std::pow(294.0L / 293.0L, 4000.0L);
        CHECK(to_long_double(big) == doctest::Approx(static_cast<double>(expected)).epsilon(1e-12));
    }
}
