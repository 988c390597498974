#include "ftcost/schemes.hpp"

#include "ftcost/errors.hpp"
#include "ftcost/multiplicity.hpp"
#include "ftcost/scaling.hpp"

#include <cmath>

namespace ftcost {

SchemeSpec steane_spec()
{
    SchemeSpec spec;
    spec.name = "steane";
    spec.code = {7, 1, "0/+"};
    spec.threshold = {2e-5, 0.01};

    StatePrepSpec zero_plus{"0/+", 7, 7, 50, 8, std::nullopt, 3, 3, Rational(116, 100)};
    StatePrepSpec magic{"A", 7, 0, 521, 8, 17.0, std::nullopt, 4, Rational(130, 100)};
    // The failure-multiplicity formula gives 3 for the repetition-code state;
    // the published cost matrix is built with 2.
    StatePrepSpec rep{"Rep", 7, 1, 17, 8, 7.0, 2, 2, Rational(113, 100)};
    spec.states = {zero_plus, magic, rep};

    spec.ec_gadget = ECGadgetSpec{{{"0/+", 1}, {"0/+", 1}}, 0, 1, 1};
    spec.magic = MagicGadgetSpec{"A", {"Rep"}, 3, 2};
    return spec;
}

Scheme steane_scheme(bool shared, Rounding rounding)
{
    return scheme_from_spec(steane_spec(), shared, rounding);
}

FlagParams flag_params(bool shared)
{
    FlagParams p;
    if (shared) {
        p.mu_0plus = Rational(119, 100);
        p.mu_H = Rational(131, 100);
    }
    return p;
}

CostMatrix flag_matrix(const FlagParams& p, Rounding rounding)
{
    auto finish = [&](const Rational& x) {
        return rounding == Rounding::half_up ? Rational(round_half_up(x)) : x;
    };
    const Rational ln = p.lambda_n();
    const Rational zero = 0;
    return CostMatrix({"normal", "magic-0/+", "magic-H"}, 1,
                      {{finish(ln), finish(ln + p.beta() * p.K1()), finish(p.beta() * p.K2())},
                       {zero, finish(6 * p.K1()), finish(6 * p.K2())},
                       {zero, finish(p.K1()), finish(p.K2())}});
}

SchemeSpec flag_spec(bool shared)
{
    const FlagParams p = flag_params(shared);
    SchemeSpec spec;
    spec.name = shared ? "flag-shared" : "flag";
    spec.code = {7, 1, "0/+"};
    spec.threshold = {2e-5, 0.01};
    spec.states = {
        StatePrepSpec{"0/+", 7, 4, 36, 1, std::nullopt, 2, 3, Rational(119, 100)},
        StatePrepSpec{"H", 7, 0, 316, 1, std::nullopt, 2, 4, Rational(131, 100)},
    };
    spec.raw_matrix = flag_matrix(p);
    return spec;
}

Scheme flag_scheme(bool shared, Rounding rounding)
{
    Scheme s;
    s.name = shared ? "flag-shared" : "flag";
    s.kind = SchemeKind::flag;
    s.matrix = flag_matrix(flag_params(shared), rounding);
    s.spec = flag_spec(shared);
    s.shared = shared;
    return s;
}

Rational flag_cost_closed_form(long K, const Rational& Q_n, const Rational& Q_m)
{
    if (K < 0) {
        throw DomainError("K must be >= 0");
    }
    const auto k = static_cast<unsigned>(K);
    const BigInt p39 = pow(BigInt(39), k);
    const BigInt p60 = pow(BigInt(60), k);
    // Zero-eigenvalue component; it only survives at K = 0.
    const BigInt p0 = K == 0 ? 1 : 0;
    return Rational(p39) * Q_n + Rational(82 * p60 - 65 * p39 - 2 * p0, 15) * Q_m;
}

Rational flag_ratio(long K, const Rational& magic_share)
{
    if (magic_share < 0 || magic_share > 1) {
        throw DomainError("magic share must lie in [0,1]");
    }
    const Rational denom = pow(BigInt(39), static_cast<unsigned>(K < 0 ? 0 : K));
    return flag_cost_closed_form(K, 1 - magic_share, magic_share) / denom;
}

namespace {

void check_delta(long double delta)
{
    if (!(delta >= 0 && delta <= 1)) {
        throw DomainError("delta must lie in [0,1]");
    }
}

}  // namespace

ToyLambdas toy_params(long double delta)
{
    check_delta(delta);
    return {97 * delta + 16, 27, 477 * delta + 87};
}

ToyLambdasExact toy_params_exact(const Rational& delta)
{
    if (delta < 0 || delta > 1) {
        throw DomainError("delta must lie in [0,1]");
    }
    return {97 * delta + 16, Rational(27), 477 * delta + 87};
}

CostMatrix toy_matrix(const Rational& delta)
{
    const auto p = toy_params_exact(delta);
    return CostMatrix({"normal", "magic"}, 1, {{p.lambda_n, p.b}, {Rational(0), p.lambda_m}});
}

Scheme toy_scheme(const Rational& delta)
{
    Scheme s;
    s.name = "toy:" + format_count(delta, 17);
    s.kind = SchemeKind::toy;
    s.matrix = toy_matrix(delta);
    s.delta = delta;
    return s;
}

long double divided_power_difference(long double a, long double c, long K)
{
    if (K < 0) {
        throw DomainError("K must be >= 0");
    }
    if (K == 0) {
        return 0;
    }
    if (std::fabs(a - c) <= 1e-9L * std::fmax(std::fabs(a), std::fabs(c))) {
        long double sum = 0;
        for (long j = 0; j < K; ++j) {
            sum += std::pow(a, static_cast<long double>(j)) *
                   std::pow(c, static_cast<long double>(K - 1 - j));
        }
        return sum;
    }
    return (std::pow(a, static_cast<long double>(K)) - std::pow(c, static_cast<long double>(K))) /
           (a - c);
}

long double toy_cost_per_logical(long double delta, long K)
{
    const auto p = toy_params(delta);
    return std::pow(p.lambda_m, static_cast<long double>(K)) +
           p.b * divided_power_difference(p.lambda_n, p.lambda_m, K);
}

long double toy_ratio(long double delta, long K)
{
    const auto p = toy_params(delta);
    const long double x = p.lambda_m / p.lambda_n;
    return std::pow(x, static_cast<long double>(K)) +
           p.b * divided_power_difference(p.lambda_n, p.lambda_m, K) /
               std::pow(p.lambda_n, static_cast<long double>(K));
}

Scheme scheme_from_spec(const SchemeSpec& spec, bool shared, Rounding rounding)
{
    Scheme s;
    s.name = spec.name + (shared && !spec.raw_matrix ? "-shared" : "");
    s.kind = spec.raw_matrix ? SchemeKind::raw : SchemeKind::component;
    s.spec = spec;
    s.shared = shared;
    if (spec.raw_matrix) {
        s.matrix = *spec.raw_matrix;
    } else {
        const auto mult = multiplicities_for(
            spec, shared ? MultiplicityMode::shared : MultiplicityMode::independent);
        s.matrix = build_cost_matrix(spec, mult, rounding);
    }
    return s;
}

Scheme resolve_scheme(std::string_view name, Rounding rounding)
{
    if (name == "steane") {
        return steane_scheme(false, rounding);
    }
    if (name == "steane-shared") {
        return steane_scheme(true, rounding);
    }
    if (name == "flag") {
        return flag_scheme(false, rounding);
    }
    if (name == "flag-shared") {
        return flag_scheme(true, rounding);
    }
    if (name.substr(0, 4) == "toy:") {
        Rational delta;
        try {
            const auto text = name.substr(4);
            const auto slash = text.find('/');
            if (slash == std::string_view::npos) {
                delta = rational_from_decimal(text);
            } else {
                const Rational den = rational_from_decimal(text.substr(slash + 1));
                if (den == 0) {
                    throw DomainError("zero denominator");
                }
                delta = rational_from_decimal(text.substr(0, slash)) / den;
            }
        } catch (const DomainError&) {
            throw DomainError("bad toy delta in '" + std::string(name) + "'");
        }
        Scheme s = toy_scheme(delta);
        s.name = std::string(name);
        return s;
    }
    throw DomainError("unknown scheme '" + std::string(name) + "'");
}

}  // namespace ftcost
