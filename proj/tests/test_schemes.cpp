#include "ftcost/errors.hpp"
#include "ftcost/scaling.hpp"
#include "ftcost/schemes.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace ftcost;

namespace {

double as_double(const Rational& x)
{
    return static_cast<double>(to_long_double(x));
}

std::vector<Rational> vec(std::initializer_list<long> values)
{
    std::vector<Rational> out;
    for (long v : values) {
        out.emplace_back(v);
    }
    return out;
}

}  // namespace

TEST_SUITE("schemes")
{
    TEST_CASE("Steane matrices")
    {
        const auto a = steane_scheme(false).matrix;
        CHECK(a(0, 0) == 294);
        CHECK(a(0, 1) == 3702);
        CHECK(a(1, 1) == 84);
        const auto b = steane_scheme(true).matrix;
        CHECK(b(0, 0) == 114);
        CHECK(b(0, 1) == 564);
        CHECK(b(1, 1) == 27);
        CHECK(steane_scheme(true).name == "steane-shared");
    }

    TEST_CASE("Steane asymptotes")
    {
        CHECK(format_fixed(*asymptotic_ratio(294, 84, 3702, 1), 4) == "17.6286");
        CHECK(format_fixed(*asymptotic_ratio(114, 27, 564, 1), 5) == "6.48276");
        CHECK(format_fixed(*asymptotic_ratio(294, 84, 3702, Rational(1, 10)), 5) == "2.66286");
        CHECK(format_fixed(*asymptotic_ratio(114, 27, 564, Rational(1, 10)), 5) == "1.54828");
    }

    TEST_CASE("flag matrices")
    {
        const auto M = flag_matrix(flag_params(false));
        const std::vector<std::vector<long>> expect{{39, 103, 96}, {0, 48, 72}, {0, 8, 12}};
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                CHECK(M(i, j) == expect[i][j]);
            }
        }
        const auto S = flag_matrix(flag_params(true));
        const std::vector<std::vector<long>> expect_shared{{19, 40, 31}, {0, 16, 24}, {0, 3, 4}};
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                CHECK(S(i, j) == expect_shared[i][j]);
            }
        }
        CHECK(flag_params(false).lambda_n() == 39);
        CHECK(flag_params(false).lambda_m() == 60);
    }

    TEST_CASE("flag eigenvalues")
    {
        auto ev = eigenvalues(flag_matrix(flag_params(false)));
        std::vector<double> re;
        for (const auto& z : ev) {
            CHECK(std::abs(z.imag()) < 1e-9);
            re.push_back(z.real());
        }
        std::sort(re.begin(), re.end());
        REQUIRE(re.size() == 3);
        CHECK(re[0] == doctest::Approx(0).scale(1));
        CHECK(re[1] == doctest::Approx(39));
        CHECK(re[2] == doctest::Approx(60));
    }

    TEST_CASE("flag closed form equals powering")
    {
        const auto M = flag_matrix(flag_params(false));
        for (long K = 0; K <= 6; ++K) {
            for (const auto& Q : {vec({1, 0, 0}), vec({0, 1, 0}), vec({5, 2, 0})}) {
                CHECK(flag_cost_closed_form(K, Q[0], Q[1]) == total(iterate_recursion(M, K, Q)));
            }
        }
        const Rational per_logical = flag_cost_closed_form(5, Rational(9, 10), Rational(1, 10));
        CHECK(per_logical == Rational(2335963131, 5));
        CHECK(format_fixed(per_logical, 1) == "467192626.2");
    }

    TEST_CASE("flag ratio")
    {
        CHECK(flag_ratio(5, 0) == 1);
        CHECK(as_double(flag_ratio(5, 1)) == doctest::Approx(42.7813).epsilon(1e-5));
        CHECK(as_double(flag_ratio(5, Rational(1, 10))) == doctest::Approx(5.17813).epsilon(1e-5));
    }

    TEST_CASE("headline ratios")
    {
        const Rational steane = qubit_cost_closed_form(294, 84, 3702, 5, Rational(9, 10), Rational(1, 10));
        const Rational shared = qubit_cost_closed_form(114, 27, 564, 5, Rational(9, 10), Rational(1, 10));
        const Rational flag = flag_cost_closed_form(5, Rational(9, 10), Rational(1, 10));
        CHECK(shared == Rational(BigInt("298028620647"), 10));
        CHECK(as_double(steane / flag) == doctest::Approx(12504.66).epsilon(1e-6));
        CHECK(as_double(steane / shared) == doctest::Approx(196.024).epsilon(1e-5));
        CHECK(format_sig(to_long_double(steane / flag), 3) == "1.25e+04");
    }

    TEST_CASE("toy model")
    {
        const auto p = toy_params_exact(1);
        CHECK(p.lambda_n == 113);
        CHECK(p.lambda_m == 27);
        CHECK(p.b == 564);
        CHECK(toy_params_exact(0).lambda_n == 16);
        CHECK(toy_params_exact(0).b == 87);

        CHECK(static_cast<double>(toy_cost_per_logical(1, 5)) ==
              doctest::Approx(120749716671.0).epsilon(1e-12));
        CHECK(qubit_cost_closed_form(113, 27, 564, 5, 0, 1) == Rational(BigInt("120749716671")));
        CHECK(static_cast<double>(toy_cost_per_logical(0, 3)) == doctest::Approx(142962.0).epsilon(1e-12));
        CHECK(static_cast<double>(toy_ratio(0.06L, 5)) == doctest::Approx(45.3318).epsilon(1e-5));
        CHECK(static_cast<double>(toy_ratio(1, 200)) == doctest::Approx(564.0 / 86).epsilon(1e-9));
        for (long double delta : {0.0L, 0.06L, 0.5L, 1.0L}) {
            CHECK(toy_ratio(delta, 0) == 1);
        }
    }

    TEST_CASE("toy singular point is finite and continuous")
    {
        // 97 delta + 16 = 27 at delta = 11/97
        const long double singular = 11.0L / 97.0L;
        const auto exact = toy_params_exact(Rational(11, 97));
        CHECK(exact.lambda_n == exact.lambda_m);
        for (long K : {1L, 3L, 5L, 10L}) {
            const long double at = toy_cost_per_logical(singular, K);
            CHECK(std::isfinite(static_cast<double>(at)));
            const long double left = toy_cost_per_logical(singular - 1e-7L, K);
            const long double right = toy_cost_per_logical(singular + 1e-7L, K);
            CHECK(static_cast<double>(std::fabs(left - at) / at) < 1e-4);
            CHECK(static_cast<double>(std::fabs(right - at) / at) < 1e-4);
            const Rational exact_cost =
                qubit_cost_closed_form(exact.lambda_n, exact.lambda_m, exact.b, K, 0, 1);
            CHECK(static_cast<double>(at) ==
                  doctest::Approx(as_double(exact_cost)).epsilon(1e-12));
        }
    }

    TEST_CASE("property: toy cost increases with delta")
    {
        for (long K = 1; K <= 8; ++K) {
            long double prev = 0;
            for (int i = 0; i <= 100; ++i) {
                const long double c = toy_cost_per_logical(static_cast<long double>(i) / 100, K);
                CHECK(c > prev);
                prev = c;
            }
        }
    }

    TEST_CASE("divided power difference")
    {
        CHECK(divided_power_difference(3, 2, 3) == doctest::Approx(19.0L));
        CHECK(divided_power_difference(5, 5, 4) == doctest::Approx(500.0L));
        CHECK(divided_power_difference(4, 7, 0) == 0);
    }

    TEST_CASE("scheme resolution")
    {
        CHECK(resolve_scheme("steane").matrix(0, 0) == 294);
        CHECK(resolve_scheme("steane-shared").matrix(0, 0) == 114);
        CHECK(resolve_scheme("flag").kind == SchemeKind::flag);
        CHECK(resolve_scheme("flag-shared").matrix(0, 0) == 19);
        const auto t = resolve_scheme("toy:11/97");
        CHECK(t.kind == SchemeKind::toy);
        CHECK(t.delta.value() == Rational(11, 97));
        CHECK(resolve_scheme("toy:0.5").matrix(0, 0) == Rational(129, 2));
        CHECK_THROWS_AS(resolve_scheme("nope"), DomainError);
        CHECK_THROWS_AS(resolve_scheme("toy:1/0"), Error);
        CHECK_THROWS_AS(resolve_scheme("toy:abc"), Error);
    }

    TEST_CASE("scheme from spec")
    {
        const auto s = scheme_from_spec(steane_spec(), true);
        CHECK(s.name == "steane-shared");
        CHECK(s.matrix(0, 1) == 564);
        const auto f = scheme_from_spec(flag_spec(false), false);
        CHECK(f.matrix(0, 1) == 103);
    }
}
