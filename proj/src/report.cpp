#include "ftcost/report.hpp"

#include "ftcost/errors.hpp"
#include "ftcost/scaling.hpp"

#include <cstdio>
#include <sstream>

namespace ftcost {

namespace {

std::vector<Rational> algorithm_vector(const CostMatrix& M, const Rational& Q_total,
                                       const Rational& share)
{
    std::vector<Rational> Q(M.size(), Rational(0));
    Q[0] = Q_total * (1 - share);
    if (M.j_magic() > 0) {
        Q[M.j_normal()] = Q_total * share;
    } else if (share != 0) {
        throw DomainError("scheme has no magic type but the magic share is nonzero");
    }
    return Q;
}

std::string number(const Rational& value)
{
    return format_count(value, 6);
}

}  // namespace

EstimateResult estimate(const Scheme& scheme, long K, const AlgorithmProfile& profile,
                        std::size_t replacement)
{
    if (K < 0) {
        throw DomainError("K must be >= 0");
    }
    const Rational share = profile.effective_magic_share();
    if (share < 0 || share > 1) {
        throw DomainError("magic share must lie in [0,1]");
    }
    if (profile.Q_algo_total <= 0) {
        throw DomainError("logical qubit count must be positive");
    }
    const CostMatrix& M = scheme.matrix;
    const auto Q = algorithm_vector(M, profile.Q_algo_total, share);

    EstimateResult out;
    out.K = K;
    out.Q_phys_per_type = iterate_recursion(M, K, Q);
    if (scheme.kind == SchemeKind::flag && !scheme.shared) {
        out.Q_phys_total = flag_cost_closed_form(K, Q[0], Q[1]);
    } else if (M.size() == 2) {
        out.Q_phys_total = qubit_cost_closed_form(M(0, 0), M(1, 1), M(0, 1), K, Q[0], Q[1]);
    } else {
        out.Q_phys_total = total(out.Q_phys_per_type);
    }
    out.R = ratio_R_general(M, K, Q, replacement);
    out.phase = classify_phase(M);
    return out;
}

CsvRow estimate_row(const Scheme& scheme, long K, const AlgorithmProfile& profile,
                    std::size_t replacement)
{
    const auto result = estimate(scheme, K, profile, replacement);
    CsvRow row;
    row.scheme = scheme.name;
    row.K = K;
    row.share = profile.effective_magic_share();
    row.q_phys_total = result.Q_phys_total;
    row.q_per_logical = result.Q_phys_total / profile.Q_algo_total;
    row.ratio_R = result.R;
    row.phase = result.phase;
    return row;
}

std::string to_csv_line(const CsvRow& row)
{
    auto pick = [](const std::optional<long double>& fp, const Rational& exact) {
        return fp ? format_sig(*fp, 6) : number(exact);
    };
    std::ostringstream out;
    out << row.scheme << ',' << row.K << ',' << number(row.share) << ','
        << pick(row.q_phys_total_fp, row.q_phys_total) << ','
        << pick(row.q_per_logical_fp, row.q_per_logical) << ','
        << pick(row.ratio_R_fp, row.ratio_R) << ',' << to_string(row.phase);
    return out.str();
}

std::string to_csv(const std::vector<CsvRow>& rows)
{
    std::string out = std::string(csv_header) + "\n";
    for (const auto& row : rows) {
        out += to_csv_line(row) + "\n";
    }
    return out;
}

std::vector<CsvRow> k_sweep(const std::vector<Scheme>& schemes, long K_min, long K_max,
                            const AlgorithmProfile& profile)
{
    if (K_min < 0 || K_max < K_min) {
        throw DomainError("empty K range");
    }
    AlgorithmProfile all_normal = profile;
    all_normal.magic_share_override = Rational(0);
    std::vector<CsvRow> rows;
    for (const auto& scheme : schemes) {
        for (long K = K_min; K <= K_max; ++K) {
            rows.push_back(estimate_row(scheme, K, profile));
            rows.push_back(estimate_row(scheme, K, all_normal));
        }
    }
    return rows;
}

std::vector<CsvRow> delta_sweep(const std::vector<Rational>& deltas, const std::vector<long>& levels,
                                const Rational& logical_qubits)
{
    if (deltas.empty() || levels.empty()) {
        throw DomainError("empty delta sweep");
    }
    std::vector<CsvRow> rows;
    for (long K : levels) {
        for (const auto& delta : deltas) {
            const long double d = to_long_double(delta);
            const auto lambdas = toy_params_exact(delta);
            CsvRow row;
            row.scheme = "toy:" + format_count(delta, 6);
            row.K = K;
            row.share = 1;
            row.q_per_logical_fp = toy_cost_per_logical(d, K);
            row.q_phys_total_fp = *row.q_per_logical_fp * to_long_double(logical_qubits);
            row.ratio_R_fp = toy_ratio(d, K);
            row.phase = classify_phase(lambdas.lambda_n, lambdas.lambda_m);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<PhaseRow> phase_sweep(const std::vector<Rational>& lambda_ratios,
                                  const std::vector<Rational>& shares, const Rational& b)
{
    if (lambda_ratios.empty() || shares.empty()) {
        throw DomainError("empty phase sweep");
    }
    std::vector<PhaseRow> rows;
    for (const auto& share : shares) {
        for (const auto& x : lambda_ratios) {
            const auto C = asymptotic_ratio(1, x, b, share);
            rows.push_back({x, share, C ? 1 / *C : Rational(0), classify_phase(Rational(1), x)});
        }
    }
    return rows;
}

std::string to_csv(const std::vector<PhaseRow>& rows)
{
    std::string out = std::string(phase_csv_header) + "\n";
    for (const auto& row : rows) {
        out += number(row.lambda_ratio) + "," + number(row.share) + "," +
               number(row.inverse_R_inf) + "," + std::string(to_string(row.phase)) + "\n";
    }
    return out;
}

std::vector<MultiplicityRow> multiplicity_table(const SchemeSpec& spec,
                                                std::optional<long double> bound, long V)
{
    const long double B = spec.threshold.B(spec.code.t);
    const long double p = spec.threshold.p_thres;
    std::vector<MultiplicityRow> rows;
    for (const auto& s : spec.states) {
        MultiplicityRow row;
        row.state = s.name;
        row.N_fault = s.N_fault;
        row.Np = verification_failure_bound(s.N_fault, p);
        row.M_per_exrec = s.M_per_exrec;
        row.mu_independent =
            failure_multiplicity_independent(s.N_fault, s.M_per_exrec, B, spec.threshold.kappa);
        if (s.mu && *s.mu != row.mu_independent) {
            row.mu_pinned = *s.mu;
        }
        if (bound) {
            row.spares = shared_spares(V, s.N_fault, p, *bound);
            row.mu_shared = failure_multiplicity_shared(V, *row.spares);
            if (s.mu_shared && format_fixed(*s.mu_shared, 2) != format_fixed(*row.mu_shared, 2)) {
                row.mu_shared_pinned = *s.mu_shared;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_multiplicity_table(const std::vector<MultiplicityRow>& rows)
{
    std::string out;
    char line[256];
    std::snprintf(line, sizeof line, "%-8s %6s %10s %4s %8s %6s %10s\n", "state", "N", "Np<=",
                  "M", "mu_ind", "S", "mu_shared");
    out += line;
    std::string notes;
    for (const auto& r : rows) {
        char np[32];
        std::snprintf(np, sizeof np, "%.2Lf%%", r.Np * 100);
        std::string mu = std::to_string(r.mu_independent);
        if (r.mu_pinned) {
            mu += "*";
            notes += "* " + r.state + ": the formula gives " + std::to_string(r.mu_independent) +
                     "; the scheme's cost matrix uses " + std::to_string(*r.mu_pinned) + "\n";
        }
        std::string mu_sh = r.mu_shared ? format_fixed(*r.mu_shared, 2) : "-";
        if (r.mu_shared_pinned) {
            mu_sh += "*";
            notes += "* " + r.state + ": the bound gives mu_shared " +
                     format_fixed(*r.mu_shared, 2) + "; the scheme's cost matrix uses " +
                     format_fixed(*r.mu_shared_pinned, 2) + "\n";
        }
        std::snprintf(line, sizeof line, "%-8s %6ld %10s %4ld %8s %6s %10s\n", r.state.c_str(),
                      r.N_fault, np, r.M_per_exrec, mu.c_str(),
                      r.spares ? std::to_string(*r.spares).c_str() : "-", mu_sh.c_str());
        out += line;
    }
    return out + notes;
}

std::vector<Rational> linear_grid(const Rational& first, const Rational& last, long points)
{
    if (points < 1) {
        throw DomainError("grid needs at least one point");
    }
    if (points == 1) {
        return {first};
    }
    std::vector<Rational> out;
    for (long i = 0; i < points; ++i) {
        out.push_back(first + (last - first) * Rational(i, points - 1));
    }
    return out;
}

}  // namespace ftcost
