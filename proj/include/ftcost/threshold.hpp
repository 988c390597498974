#pragma once

namespace ftcost {

/// Default threshold for every built-in scheme.
inline constexpr double default_p_thres = 2e-5;

struct LogicalError {
    long double value;
    /// Set when the value exceeds 1 and is no longer a probability.
    bool regime_warning;
};

/// B^(-1/t) (B^(1/t) p0)^((t+1)^k), evaluated in log space.
LogicalError logical_error(long double p0, long double B, long t, long k);

/// (B (1+kappa) p0)^(2^k) / (B (1+kappa)).
long double adjusted_logical_error(long double p0, long double B, long double kappa, long k);

/// Smallest K with p_K N_algo <= epsilon at t = 1, B = 1/p_thres. The
/// closed-form estimate is confirmed (and corrected if needed) by iteration.
long required_level(long double p0, long double p_thres, long double N_algo,
                    long double epsilon);

/// Same question for general t, by direct iteration.
long required_level(long double p0, long double B, long t, long double N_algo,
                    long double epsilon);

/// 20 P + (1 - P).
long double depth_spread_factor(long double P_magic);

}  // namespace ftcost
