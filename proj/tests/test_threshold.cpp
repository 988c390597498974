#include "ftcost/errors.hpp"
#include "ftcost/threshold.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace ftcost;

namespace {

double d(long double x)
{
    return static_cast<double>(x);
}

long brute_level(long double p0, long double B, long t, long double N, long double eps)
{
    for (long K = 0; K <= 64; ++K) {
        if (logical_error(p0, B, t, K).value * N <= eps) {
            return K;
        }
    }
    return -1;
}

}  // namespace

TEST_SUITE("threshold")
{
    TEST_CASE("logical error")
    {
        CHECK(d(logical_error(1e-6L, 5e4L, 1, 1).value) == doctest::Approx(5e-8).epsilon(1e-9));
        CHECK(d(logical_error(1e-6L, 5e4L, 1, 2).value) == doctest::Approx(1.25e-10).epsilon(1e-9));
        CHECK(d(logical_error(1e-6L, 5e4L, 1, 0).value) == doctest::Approx(1e-6).epsilon(1e-12));
        CHECK_FALSE(logical_error(1e-6L, 5e4L, 1, 3).regime_warning);
        CHECK(logical_error(1e-3L, 5e4L, 1, 3).regime_warning);
        CHECK_THROWS_AS(logical_error(0, 5e4L, 1, 1), DomainError);
        CHECK_THROWS_AS(logical_error(1e-6L, 5e4L, 0, 1), DomainError);
    }

    TEST_CASE("adjusted logical error")
    {
        CHECK(d(adjusted_logical_error(1e-6L, 5e4L, 0.01L, 1)) == doctest::Approx(5.05e-8).epsilon(1e-9));
        CHECK(d(adjusted_logical_error(1e-6L, 5e4L, 0, 2)) ==
              doctest::Approx(d(logical_error(1e-6L, 5e4L, 1, 2).value)).epsilon(1e-12));
    }

    TEST_CASE("required level")
    {
        CHECK(required_level(1e-6L, 2e-5L, 1e14L, 0.01L) == 4);
        CHECK(required_level(1e-4L, 1e6L, 2, 1e10L, 1) == 2);
        CHECK(required_level(1e-10L, 2e-5L, 1, 1) == 0);
        CHECK_THROWS_AS(required_level(2e-5L, 2e-5L, 1e14L, 0.01L), RegimeError);
        CHECK_THROWS_AS(required_level(3e-5L, 2e-5L, 1e14L, 0.01L), RegimeError);
        CHECK_THROWS_AS(required_level(1e-3L, 1e6L, 2, 1e10L, 1), RegimeError);
        CHECK_THROWS_AS(required_level(1e-6L, 2e-5L, 1e14L, 0), DomainError);
        CHECK_THROWS_AS(required_level(0, 2e-5L, 1e14L, 0.01L), DomainError);
    }

    TEST_CASE("property: required level is monotone")
    {
        for (long double p0 : {1e-8L, 1e-7L, 1e-6L, 5e-6L, 1e-5L, 1.9e-5L}) {
            long prev = 0;
            for (long double N = 1; N <= 1e20L; N *= 10) {
                const long K = required_level(p0, 2e-5L, N, 0.01L);
                CHECK(K >= prev);
                prev = K;
            }
        }
        for (long double N : {1e6L, 1e12L, 1e18L}) {
            long prev = 0;
            for (long double p0 : {1e-9L, 1e-8L, 1e-7L, 1e-6L, 5e-6L, 1e-5L, 1.9e-5L}) {
                const long K = required_level(p0, 2e-5L, N, 0.01L);
                CHECK(K >= prev);
                prev = K;
            }
        }
    }

    TEST_CASE("property: returned level is the smallest that meets the budget")
    {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<long double> log_p(-12, std::log10(2e-5L) - 0.01L);
        std::uniform_real_distribution<long double> log_n(0, 24);
        std::uniform_real_distribution<long double> log_eps(-6, 0);
        for (int trial = 0; trial < 1000; ++trial) {
            const long double p0 = std::pow(10.0L, log_p(rng));
            const long double N = std::pow(10.0L, log_n(rng));
            const long double eps = std::pow(10.0L, log_eps(rng));
            const long K = required_level(p0, 2e-5L, N, eps);
            CAPTURE(d(p0));
            CAPTURE(d(N));
            CAPTURE(d(eps));
            CHECK(logical_error(p0, 5e4L, 1, K).value * N <= eps);
            if (K > 0) {
                CHECK(logical_error(p0, 5e4L, 1, K - 1).value * N > eps);
            }
            CHECK(K == brute_level(p0, 5e4L, 1, N, eps));
        }
    }

    TEST_CASE("general t agrees with brute force")
    {
        for (long t : {2L, 3L}) {
            const long double B = 1e6L;
            const long double p_thres = std::pow(B, -1.0L / static_cast<long double>(t));
            for (long double frac : {0.5L, 0.1L, 0.01L}) {
                for (long double N : {1L, 1000L, 1000000000L}) {
                    const long double p0 = frac * p_thres;
                    CHECK(required_level(p0, B, t, N, 0.01L) == brute_level(p0, B, t, N, 0.01L));
                }
            }
        }
    }

    TEST_CASE("property: K barely moves with N or epsilon")
    {
        // logged; the bound below is loose
        const long K1 = required_level(1e-6L, 2e-5L, 1e12L, 0.01L);
        const long K2 = required_level(1e-6L, 2e-5L, 1e24L, 0.01L);
        const long K3 = required_level(1e-6L, 2e-5L, 1e12L, 1e-12L);
        MESSAGE("K at N=1e12: " << K1 << ", N=1e24: " << K2 << ", eps=1e-12: " << K3);
        CHECK(K2 - K1 <= 2);
    }

    TEST_CASE("depth spread factor")
    {
        CHECK(d(depth_spread_factor(0.01L)) == doctest::Approx(1.19));
        CHECK(d(depth_spread_factor(0.05L)) == doctest::Approx(1.95));
        CHECK(depth_spread_factor(0) == 1);
        CHECK(depth_spread_factor(1) == 20);
        CHECK_THROWS_AS(depth_spread_factor(1.5L), DomainError);
    }
}
