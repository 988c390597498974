#include "ftcost/threshold.hpp"

#include "ftcost/errors.hpp"
#include "ftcost/numeric.hpp"

#include <cmath>
#include <string>

namespace ftcost {

LogicalError logical_error(long double p0, long double B, long t, long k)
{
    if (!(p0 > 0) || !(B > 0) || t < 1 || k < 0) {
        throw DomainError("logical_error needs p0 > 0, B > 0, t >= 1, k >= 0");
    }
    const long double inv_t = 1.0L / static_cast<long double>(t);
    const long double log_scale = std::log(B) * inv_t;
    const long double growth = std::pow(static_cast<long double>(t + 1), static_cast<long double>(k));
    const long double log_p = -log_scale + growth * (log_scale + std::log(p0));
    const long double value = std::exp(log_p);
    return {value, value > 1};
}

long double adjusted_logical_error(long double p0, long double B, long double kappa, long k)
{
    if (!(p0 > 0) || !(B > 0) || kappa < 0 || k < 0) {
        throw DomainError("adjusted_logical_error needs p0 > 0, B > 0, kappa >= 0, k >= 0");
    }
    const long double scale = B * (1 + kappa);
    const long double log_p = std::ldexp(1.0L, static_cast<int>(k)) * std::log(scale * p0) -
                              std::log(scale);
    return std::exp(log_p);
}

namespace {

bool meets(long double p0, long double B, long t, long K, long double N_algo, long double epsilon)
{
    return logical_error(p0, B, t, K).value * N_algo <= epsilon;
}

long settle(long K, long double p0, long double B, long t, long double N_algo,
            long double epsilon)
{
    constexpr long cap = 64;
    while (K > 0 && meets(p0, B, t, K - 1, N_algo, epsilon)) {
        --K;
    }
    while (!meets(p0, B, t, K, N_algo, epsilon)) {
        if (++K > cap) {
            throw RegimeError("no concatenation level up to 64 meets the failure budget");
        }
    }
    return K;
}

}  // namespace

long required_level(long double p0, long double p_thres, long double N_algo, long double epsilon)
{
    if (!(p0 > 0) || !(N_algo > 0) || !(epsilon > 0)) {
        throw DomainError("required_level needs positive p0, N_algo, epsilon");
    }
    if (p0 >= p_thres) {
        throw RegimeError("p0 = " + format_sig(p0) + " is not below p_thres = " +
                          format_sig(p_thres) + "; no finite K");
    }
    const long double B = 1 / p_thres;
    long K = 0;
    const long double inner = p_thres * N_algo / epsilon;
    if (inner > 1) {
        const long double estimate =
            std::log(std::log(inner) / std::log(p_thres / p0)) / std::log(2.0L);
        K = estimate > 0 ? static_cast<long>(std::ceil(estimate)) : 0;
    }
    return settle(K, p0, B, 1, N_algo, epsilon);
}

long required_level(long double p0, long double B, long t, long double N_algo, long double epsilon)
{
    if (t == 1) {
        return required_level(p0, 1 / B, N_algo, epsilon);
    }
    if (!(p0 > 0) || !(B > 0) || !(N_algo > 0) || !(epsilon > 0) || t < 1) {
        throw DomainError("required_level needs positive p0, B, N_algo, epsilon and t >= 1");
    }
    const long double p_thres = std::pow(B, -1.0L / static_cast<long double>(t));
    if (p0 >= p_thres) {
        throw RegimeError("p0 is not below the threshold; no finite K");
    }
    return settle(0, p0, B, t, N_algo, epsilon);
}

long double depth_spread_factor(long double P_magic)
{
    if (P_magic < 0 || P_magic > 1) {
        throw DomainError("magic-gate proportion must lie in [0,1]");
    }
    return 20 * P_magic + (1 - P_magic);
}

}  // namespace ftcost
