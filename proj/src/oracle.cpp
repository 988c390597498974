#include "ftcost/oracle.hpp"

#include "ftcost/errors.hpp"
#include "ftcost/scaling.hpp"
#include "ftcost/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace ftcost {

namespace {

Rational failure_probability(long N_fault, const Rational& p)
{
    const Rational q = N_fault * p;
    if (q < 0 || q > 1) {
        throw RegimeError("N*p must lie in [0,1]");
    }
    return q;
}

/// Terms C(n,l) q^l (1-q)^(n-l) for l in [lo, hi].
Rational binomial_sum(long n, long lo, long hi, const Rational& q)
{
    if (lo > hi) {
        return 0;
    }
    std::vector<Rational> qp(static_cast<std::size_t>(n) + 1);
    std::vector<Rational> rp(static_cast<std::size_t>(n) + 1);
    qp[0] = 1;
    rp[0] = 1;
    const Rational r = 1 - q;
    for (long i = 1; i <= n; ++i) {
        qp[static_cast<std::size_t>(i)] = qp[static_cast<std::size_t>(i - 1)] * q;
        rp[static_cast<std::size_t>(i)] = rp[static_cast<std::size_t>(i - 1)] * r;
    }
    Rational sum = 0;
    BigInt binom = 1;  // C(n, l), advanced incrementally
    for (long l = 0; l <= hi; ++l) {
        if (l > 0) {
            binom = binom * (n - l + 1) / l;
        }
        if (l >= lo) {
            sum += Rational(binom) * qp[static_cast<std::size_t>(l)] *
                   rp[static_cast<std::size_t>(n - l)];
        }
    }
    return sum;
}

void guard(long V, long S)
{
    if (V < 0 || S < 0) {
        throw DomainError("V and S must be >= 0");
    }
    if (V + S > 200) {
        throw DomainError("exact tail limited to V + S <= 200");
    }
}

}  // namespace

Rational exact_shared_tail(long V, long S, long N_fault, const Rational& p)
{
    guard(V, S);
    const Rational q = failure_probability(N_fault, p);
    return binomial_sum(V + S, S + 1, V + S, q);
}

Rational exact_shared_head(long V, long S, long N_fault, const Rational& p)
{
    guard(V, S);
    const Rational q = failure_probability(N_fault, p);
    return binomial_sum(V + S, 0, std::min(S, V + S), q);
}

std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k)
{
    return (x << k) | (x >> (64 - k));
}

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed)
{
    for (auto& word : s_) {
        word = splitmix64(seed);
    }
}

std::uint64_t Xoshiro256::next()
{
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

namespace {

struct Bernoulli {
    std::uint64_t threshold = 0;
    bool always = false;

    explicit Bernoulli(const Rational& q)
    {
        const BigInt scaled = floor(q * Rational(BigInt(1) << 64));
        if (scaled >= (BigInt(1) << 64)) {
            always = true;
        } else {
            threshold = scaled.convert_to<std::uint64_t>();
        }
    }

    bool fails(Xoshiro256& rng) const
    {
        const std::uint64_t u = rng.next();
        return always || u < threshold;
    }
};

std::uint64_t run_block(const Bernoulli& draw, const LackMode& mode, std::uint64_t seed,
                        std::uint64_t block, std::uint64_t count)
{
    Xoshiro256 rng(seed ^ (block * 0xD1B54A32D192ED03ULL));
    std::uint64_t events = 0;
    for (std::uint64_t trial = 0; trial < count; ++trial) {
        if (mode.kind == LackMode::Kind::independent) {
            bool all_failed = true;
            for (long i = 0; i < mode.mu; ++i) {
                if (!draw.fails(rng)) {
                    all_failed = false;
                    break;
                }
            }
            events += all_failed ? 1 : 0;
        } else {
            long failures = 0;
            for (long i = 0; i < mode.V + mode.S; ++i) {
                failures += draw.fails(rng) ? 1 : 0;
            }
            events += failures > mode.S ? 1 : 0;
        }
    }
    return events;
}

}  // namespace

McResult mc_lack_frequency(long N_fault, const Rational& p, const LackMode& mode,
                           std::uint64_t trials, std::uint64_t seed, unsigned workers)
{
    if (trials == 0) {
        throw DomainError("need at least one trial");
    }
    if (mode.kind == LackMode::Kind::independent && mode.mu < 1) {
        throw DomainError("mu must be >= 1");
    }
    if (mode.kind == LackMode::Kind::shared && (mode.V < 1 || mode.S < 0)) {
        throw DomainError("shared mode needs V >= 1 and S >= 0");
    }
    const Rational q = failure_probability(N_fault, p);

    McResult out;
    out.trials = trials;
    out.analytic = mode.kind == LackMode::Kind::independent
                       ? pow(q, static_cast<unsigned>(mode.mu))
                       : exact_shared_tail(mode.V, mode.S, N_fault, p);
    const double a = static_cast<double>(to_long_double(out.analytic));
    out.analytic_sigma = std::sqrt(a * (1 - a) / static_cast<double>(trials));
    if (q == 0) {
        return out;
    }
    const double expected = a * static_cast<double>(trials);
    if (expected < 10) {
        throw RegimeError("expected event count " + format_sig(expected, 3) +
                          " < 10; raise p or the trial count (tiny probabilities are checked "
                          "with the exact tail instead)");
    }

    const Bernoulli draw(q);
    const std::uint64_t blocks = (trials + mc_block_size - 1) / mc_block_size;
    std::vector<std::uint64_t> per_block(blocks, 0);
    if (workers == 0) {
        workers = std::max(1U, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));
    auto work = [&](unsigned w) {
        for (std::uint64_t b = w; b < blocks; b += workers) {
            const std::uint64_t count = std::min(mc_block_size, trials - b * mc_block_size);
            per_block[b] = run_block(draw, mode, seed, b, count);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) {
        pool.emplace_back(work, w);
    }
    work(0);
    for (auto& t : pool) {
        t.join();
    }
    for (auto e : per_block) {
        out.events += e;
    }
    out.frequency = static_cast<double>(out.events) / static_cast<double>(trials);
    out.std_error = std::sqrt(out.frequency * (1 - out.frequency) / static_cast<double>(trials));
    return out;
}

bool CrosscheckReport::ok() const
{
    return std::all_of(entries.begin(), entries.end(),
                       [](const CrosscheckEntry& e) { return e.equal; });
}

namespace {

bool same_to_digits(long double a, long double b, int digits)
{
    const long double scale = std::max(std::fabs(a), std::fabs(b));
    if (scale == 0) {
        return true;
    }
    return std::fabs(a - b) <= 0.5L * std::pow(10.0L, 1 - digits) * scale;
}

std::vector<Rational> unit(std::size_t dim, std::size_t i)
{
    std::vector<Rational> v(dim, Rational(0));
    v[i] = 1;
    return v;
}

}  // namespace

CrosscheckReport crosscheck_closed_forms(std::string_view scheme_name, long K_max)
{
    const Scheme scheme = resolve_scheme(scheme_name);
    CrosscheckReport report;
    report.scheme = scheme.name;
    const CostMatrix& M = scheme.matrix;

    for (long K = 0; K <= K_max; ++K) {
        if (scheme.kind == SchemeKind::toy) {
            const Rational exact = total(iterate_recursion(M, K, unit(2, 1)));
            const Rational closed = qubit_cost_closed_form(M(0, 0), M(1, 1), M(0, 1), K, 0, 1);
            report.entries.push_back({K, "magic column, exact closed form", format_count(closed, 17),
                                      format_count(exact, 17), closed == exact});
            const long double fp = toy_cost_per_logical(to_long_double(*scheme.delta), K);
            report.entries.push_back({K, "magic column, floating closed form", format_sig(fp, 15),
                                      format_sig(to_long_double(exact), 15),
                                      same_to_digits(fp, to_long_double(exact), 12)});
            continue;
        }
        if (scheme.kind == SchemeKind::flag && !scheme.shared) {
            for (std::size_t i = 0; i < 2; ++i) {
                const Rational exact = total(iterate_recursion(M, K, unit(3, i)));
                const Rational closed =
                    flag_cost_closed_form(K, i == 0 ? 1 : 0, i == 1 ? 1 : 0);
                report.entries.push_back({K, i == 0 ? "normal column" : "magic column",
                                          format_count(closed), format_count(exact),
                                          closed == exact});
            }
            continue;
        }
        if (M.size() == 2) {
            for (std::size_t i = 0; i < 2; ++i) {
                const Rational exact = total(iterate_recursion(M, K, unit(2, i)));
                const Rational closed = qubit_cost_closed_form(
                    M(0, 0), M(1, 1), M(0, 1), K, i == 0 ? 1 : 0, i == 1 ? 1 : 0);
                report.entries.push_back({K, i == 0 ? "normal column" : "magic column",
                                          format_count(closed), format_count(exact),
                                          closed == exact});
            }
            continue;
        }
        // No published closed form: compare the eigen decomposition path.
        for (std::size_t i = 0; i < M.size(); ++i) {
            const auto general = qubit_cost_general(M, K, unit(M.size(), i));
            const bool have = general.eigen_total.has_value();
            report.entries.push_back(
                {K, "column " + std::to_string(i) + ", eigen path",
                 have ? format_sig(*general.eigen_total, 15) : std::string("n/a"),
                 format_count(general.total), have && general.eigen_agrees});
        }
    }
    return report;
}

std::vector<OracleConfigResult> mc_sweep(std::uint64_t seed, std::uint64_t trials_per_config,
                                         unsigned workers)
{
    std::vector<OracleConfigResult> out;
    const long Ns[] = {17, 36, 50, 316, 521};
    const long qs_percent[] = {5, 10, 20, 30, 40};
    // Independent mode: 5 N x 5 q x 2 mu = 50 configurations.
    for (long N : Ns) {
        for (long qp : qs_percent) {
            for (long mu : {1L, 2L}) {
                const Rational p = Rational(qp, 100) / N;
                const std::uint64_t s = seed + out.size();
                auto r = mc_lack_frequency(N, p, LackMode::independent(mu), trials_per_config, s,
                                           workers);
                const double dev = std::fabs(r.frequency - static_cast<double>(to_long_double(r.analytic)));
                out.push_back({"independent N=" + std::to_string(N) + " Np=0." +
                                   (qp < 10 ? "0" : "") + std::to_string(qp) +
                                   " mu=" + std::to_string(mu),
                               r, dev <= 4 * r.analytic_sigma});
            }
        }
    }
    // Shared mode: first 50 grid points with a measurable tail.
    const long q_grid[] = {2, 5, 10, 20, 30};
    for (long V : {5L, 10L, 20L}) {
        for (long S : {0L, 1L, 2L, 3L}) {
            for (long qp : q_grid) {
                if (out.size() >= 100) {
                    return out;
                }
                const Rational p = Rational(qp, 100) / 10;
                const Rational tail = exact_shared_tail(V, S, 10, p);
                if (to_long_double(tail) * static_cast<long double>(trials_per_config) < 200) {
                    continue;
                }
                const std::uint64_t s = seed + out.size();
                auto r = mc_lack_frequency(10, p, LackMode::shared(V, S), trials_per_config, s,
                                           workers);
                const double dev = std::fabs(r.frequency - static_cast<double>(to_long_double(r.analytic)));
                out.push_back({"shared V=" + std::to_string(V) + " S=" + std::to_string(S) +
                                   " Np=0." + (qp < 10 ? "0" : "") + std::to_string(qp),
                               r, dev <= 4 * r.analytic_sigma});
            }
        }
    }
    return out;
}

}  // namespace ftcost
