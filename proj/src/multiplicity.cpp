#include "ftcost/multiplicity.hpp"

#include "ftcost/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ftcost {

double ec_cycle_time(const ECGadgetSpec& ec)
{
    long steps = 1 + ec.d_R;
    for (const auto& e : ec.syndromes) {
        steps += e.d;
    }
    return static_cast<double>(steps * ec.g);
}

double ec_ancilla_busy_time(const std::vector<double>& prep_durations, const std::vector<long>& d,
                            double tau_M, double tau_G)
{
    if (prep_durations.empty() || prep_durations.size() != d.size()) {
        throw DomainError("ancilla busy time needs equally long, nonempty duration and d lists");
    }
    double busy = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        busy = std::max(busy, prep_durations[i] + static_cast<double>(d[i]) * tau_G + tau_M);
    }
    return busy;
}

long time_multiplicity(double tau_anc, double tau_between)
{
    if (!(tau_anc > 0) || !(tau_between > 0)) {
        throw DomainError("time multiplicity needs positive times");
    }
    return std::max(1L, static_cast<long>(std::ceil(tau_anc / tau_between)));
}

long double verification_failure_bound(long N_fault, long double p)
{
    const long double q = static_cast<long double>(N_fault) * p;
    if (q >= 1) {
        throw RegimeError("N*p = " + format_sig(q) + " >= 1; the failure bound is vacuous");
    }
    return q;
}

long double lack_probability_independent(long N_fault, long double p, long mu)
{
    if (mu < 1) {
        throw DomainError("mu must be >= 1");
    }
    return std::pow(verification_failure_bound(N_fault, p), static_cast<long double>(mu));
}

long failure_multiplicity_independent(long N_fault, long M_per_exrec, long double B,
                                      long double kappa)
{
    if (B <= static_cast<long double>(N_fault)) {
        throw RegimeError("B <= N: no finite failure multiplicity");
    }
    const long double lower = std::log(static_cast<long double>(M_per_exrec) * B / kappa) /
                              std::log(B / static_cast<long double>(N_fault));
    return std::max(1L, static_cast<long>(std::ceil(lower)));
}

bool threshold_degradation_check(long double p_k, long double B, long M, long double p_lack,
                                 long double kappa)
{
    const long double base = B * p_k * p_k;
    return base + static_cast<long double>(M) * p_lack <= (1 + kappa) * base;
}

long double shared_tail(long V, long S, long N_fault, long double p)
{
    if (V < 0 || S < 0) {
        throw DomainError("V and S must be >= 0");
    }
    const long double q = verification_failure_bound(N_fault, p);
    const long total = V + S;
    if (S >= total) {
        return 0;
    }
    if (q == 0) {
        return 0;
    }
    const long double log_q = std::log(q);
    const long double log_1mq = std::log1p(-q);
    const long double lg_total = std::lgamma(static_cast<long double>(total) + 1);
    std::vector<long double> logs;
    logs.reserve(static_cast<std::size_t>(total - S));
    long double peak = -std::numeric_limits<long double>::infinity();
    for (long l = S + 1; l <= total; ++l) {
        const long double lt = lg_total - std::lgamma(static_cast<long double>(l) + 1) -
                               std::lgamma(static_cast<long double>(total - l) + 1) +
                               static_cast<long double>(l) * log_q +
                               static_cast<long double>(total - l) * log_1mq;
        logs.push_back(lt);
        peak = std::max(peak, lt);
    }
    long double acc = 0;
    for (long double lt : logs) {
        acc += std::exp(lt - peak);
    }
    return std::exp(peak + std::log(acc));
}

long double level1_gate_count(long double Q_phys_Kminus1, long double D, long K, long double D_L)
{
    if (K < 1) {
        throw DomainError("K must be >= 1");
    }
    return Q_phys_Kminus1 * std::pow(D, static_cast<long double>(K - 1)) * 2 * D_L;
}

long double shared_budget(long double kappa, long K, long M, long double N_gates_level1)
{
    if (!(kappa > 0) || K < 1 || M < 1 || !(N_gates_level1 > 0)) {
        throw DomainError("shared budget needs positive arguments");
    }
    return kappa / (static_cast<long double>(K) * static_cast<long double>(M) * N_gates_level1);
}

long shared_spares(long V, long N_fault, long double p, long double bound)
{
    if (V < 1) {
        throw DomainError("V must be >= 1");
    }
    if (!(bound > 0) || bound > 1) {
        throw DomainError("bound must lie in (0,1]");
    }
    verification_failure_bound(N_fault, p);
    constexpr long cap = 1'000'000;
    for (long S = 0; S <= cap; ++S) {
        if (shared_tail(V, S, N_fault, p) <= bound) {
            return S;
        }
    }
    throw RegimeError("no spare count up to 1e6 meets the bound");
}

Rational failure_multiplicity_shared(long V, long S)
{
    if (V < 1 || S < 0) {
        throw DomainError("need V >= 1 and S >= 0");
    }
    return Rational(V + S, V);
}

Multiplicities multiplicities_for(const SchemeSpec& spec, MultiplicityMode mode,
                                  const SharedPrepBudget* budget)
{
    const long double B = spec.threshold.B(spec.code.t);
    Multiplicities out;
    for (const auto& s : spec.states) {
        MultiplicityRecord rec;
        rec.mode = mode;
        rec.r = s.r.value_or(1);
        if (spec.magic && spec.magic->state == s.name) {
            rec.r = spec.magic->r_A;
        }
        if (mode == MultiplicityMode::independent) {
            rec.mu = s.mu ? *s.mu
                          : failure_multiplicity_independent(s.N_fault, s.M_per_exrec, B,
                                                             spec.threshold.kappa);
        } else if (s.mu_shared) {
            rec.mu = *s.mu_shared;
        } else if (budget != nullptr) {
            const long S = shared_spares(budget->V, s.N_fault, spec.threshold.p_thres, budget->bound);
            rec.mu = failure_multiplicity_shared(budget->V, S);
        } else {
            throw ConfigSemanticError("state '" + s.name +
                                      "' has no mu_shared and no sharing budget was given");
        }
        out.emplace(s.name, rec);
    }
    return out;
}

}  // namespace ftcost
