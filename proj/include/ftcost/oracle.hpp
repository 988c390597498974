#pragma once

#include "ftcost/numeric.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ftcost {

/// Exact binomial tail sum_{l=S+1}^{V+S} C(V+S,l) q^l (1-q)^(V+S-l) with
/// q = N p. Guarded to V + S <= 200.
Rational exact_shared_tail(long V, long S, long N_fault, const Rational& p);

/// The matching head sum_{l=0}^{S}; head + tail == 1 exactly.
Rational exact_shared_head(long V, long S, long N_fault, const Rational& p);

/// splitmix64 step, used to expand seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// xoshiro256** 1.0:
///   result = rotl(s1 * 5, 7) * 9
///   t = s1 << 17
///   s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3; s2 ^= t; s3 = rotl(s3, 45)
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed);
    std::uint64_t next();

private:
    std::array<std::uint64_t, 4> s_{};
};

struct LackMode {
    enum class Kind { independent, shared };
    Kind kind = Kind::independent;
    long mu = 1;
    long V = 1;
    long S = 0;

    static LackMode independent(long mu) { return {Kind::independent, mu, 1, 0}; }
    static LackMode shared(long V, long S) { return {Kind::shared, 1, V, S}; }
};

struct McResult {
    std::uint64_t trials = 0;
    std::uint64_t events = 0;
    double frequency = 0;
    /// Binomial standard error of the empirical frequency.
    double std_error = 0;
    /// Exact probability the sampler targets.
    Rational analytic = 0;
    /// Standard error implied by the analytic probability.
    double analytic_sigma = 0;
};

/// Trials run in fixed blocks of this size; block b draws from its own
/// stream seeded by (seed, b), so counts do not depend on `workers`.
inline constexpr std::uint64_t mc_block_size = 4096;

/// Empirical frequency of lacking a verified state. Each preparation fails
/// with probability N p, sampled by integer comparison against
/// floor(N p 2^64). Rejects regimes with fewer than 10 expected events.
McResult mc_lack_frequency(long N_fault, const Rational& p, const LackMode& mode,
                           std::uint64_t trials, std::uint64_t seed, unsigned workers = 0);

struct CrosscheckEntry {
    long K;
    std::string what;
    std::string closed;
    std::string iterated;
    bool equal;
};

struct CrosscheckReport {
    std::string scheme;
    std::vector<CrosscheckEntry> entries;

    bool ok() const;
};

/// Closed forms against exact iterated powering for K = 0..K_max. Steane
/// and config schemes compare exactly; toy schemes to 12 significant digits.
CrosscheckReport crosscheck_closed_forms(std::string_view scheme, long K_max);

struct OracleConfigResult {
    std::string label;
    McResult result;
    bool within_4_sigma;
};

/// The fixed 100-configuration Monte-Carlo sweep.
std::vector<OracleConfigResult> mc_sweep(std::uint64_t seed, std::uint64_t trials_per_config,
                                         unsigned workers = 0);

}  // namespace ftcost
