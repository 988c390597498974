// ftcost: physical-qubit cost estimates for concatenated fault-tolerant schemes.

#include "ftcost/errors.hpp"
#include "ftcost/model.hpp"
#include "ftcost/multiplicity.hpp"
#include "ftcost/oracle.hpp"
#include "ftcost/report.hpp"
#include "ftcost/scaling.hpp"
#include "ftcost/schemes.hpp"
#include "ftcost/threshold.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ftcost;

constexpr std::uint64_t default_seed = 20240601;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DomainError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& output)
{
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) {
        throw DomainError("cannot write '" + output + "'");
    }
    out << text;
}

Rational parse_number(const std::string& text, const char* what)
{
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            return rational_from_decimal(text);
        }
        const Rational den = rational_from_decimal(std::string_view(text).substr(slash + 1));
        if (den == 0) {
            throw DomainError("zero denominator");
        }
        return rational_from_decimal(std::string_view(text).substr(0, slash)) / den;
    } catch (const DomainError&) {
        throw DomainError(std::string("bad value for ") + what + ": '" + text + "'");
    }
}

std::uint64_t seed_from_env()
{
    const char* env = std::getenv("FTCOST_SEED");
    if (env == nullptr || *env == '\0') {
        return default_seed;
    }
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
        throw DomainError("FTCOST_SEED must be an unsigned integer");
    }
    return value;
}

struct SchemeOptions {
    std::string scheme = "steane";
    std::string config;
    bool shared = false;
    bool exact = false;
};

void add_scheme_options(CLI::App* cmd, SchemeOptions& o)
{
    cmd->add_option("--scheme", o.scheme,
                    "steane | steane-shared | flag | flag-shared | toy:<delta>");
    cmd->add_option("--config", o.config, "scheme-config JSON file (overrides --scheme)");
    cmd->add_flag("--shared", o.shared, "use shared-preparation multiplicities for --config");
    cmd->add_flag("--exact", o.exact, "keep rational matrix entries instead of rounding");
}

Scheme load_scheme(const SchemeOptions& o)
{
    const Rounding rounding = o.exact ? Rounding::exact : Rounding::half_up;
    if (!o.config.empty()) {
        return scheme_from_spec(parse_scheme_config(read_file(o.config)), o.shared, rounding);
    }
    return resolve_scheme(o.scheme, rounding);
}

struct ProfileOptions {
    std::string magic_fraction = "0";
    std::string share;
    std::string logical_qubits = "1";
};

void add_profile_options(CLI::App* cmd, ProfileOptions& o)
{
    cmd->add_option("--magic-fraction", o.magic_fraction,
                    "fraction of magic gates per layer; share = min(1, 2 x fraction)");
    cmd->add_option("--share", o.share, "magic-qubit share, overriding --magic-fraction");
    cmd->add_option("--logical-qubits", o.logical_qubits, "logical qubit count");
}

AlgorithmProfile make_profile(const ProfileOptions& o)
{
    AlgorithmProfile profile;
    profile.magic_fraction = parse_number(o.magic_fraction, "--magic-fraction");
    if (profile.magic_fraction < 0 || profile.magic_fraction > 1) {
        throw DomainError("--magic-fraction must lie in [0,1]");
    }
    if (!o.share.empty()) {
        profile.magic_share_override = parse_number(o.share, "--share");
    }
    profile.Q_algo_total = parse_number(o.logical_qubits, "--logical-qubits");
    return profile;
}

std::string describe_matrix(const CostMatrix& M)
{
    std::string out;
    for (std::size_t i = 0; i < M.size(); ++i) {
        out += "  " + M.labels()[i] + ":";
        for (std::size_t j = 0; j < M.size(); ++j) {
            out += " " + format_count(M(i, j), 6);
        }
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// validate

struct Checker {
    int failures = 0;

    void check(bool ok, const std::string& what)
    {
        std::printf("%s %s\n", ok ? "ok  " : "FAIL", what.c_str());
        failures += ok ? 0 : 1;
    }
};

int run_validate(std::uint64_t seed, unsigned workers)
{
    Checker c;
    for (const char* name : {"steane", "steane-shared", "flag", "flag-shared", "toy:0", "toy:0.06",
                             "toy:0.5", "toy:1", "toy:11/97"}) {
        const auto report = crosscheck_closed_forms(name, 6);
        for (const auto& e : report.entries) {
            if (!e.equal) {
                std::printf("     %s K=%ld %s: %s vs %s\n", name, e.K, e.what.c_str(),
                            e.closed.c_str(), e.iterated.c_str());
            }
        }
        c.check(report.ok(), std::string("closed forms match recursion: ") + name);
    }

    const Rational p = rational_from_decimal("2e-5");
    bool identity = true;
    bool log_space = true;
    for (long V : {1L, 5L, 10L, 50L, 100L}) {
        for (long S : {0L, 1L, 5L, 16L, 30L}) {
            for (long N : {17L, 50L, 521L}) {
                const Rational tail = exact_shared_tail(V, S, N, p);
                identity = identity && tail + exact_shared_head(V, S, N, p) == 1;
                const long double fast = shared_tail(V, S, N, 2e-5L);
                const long double exact = to_long_double(tail);
                log_space = log_space && (exact == 0 ? fast == 0
                                                     : std::fabs(fast - exact) <= 5e-4L * exact);
            }
        }
    }
    c.check(identity, "exact tail plus head equals 1");
    c.check(log_space, "log-space tail matches exact tail to 3 significant digits");

    const auto sweep = mc_sweep(seed, 100000, workers);
    long inside = 0;
    for (const auto& r : sweep) {
        inside += r.within_4_sigma ? 1 : 0;
    }
    c.check(sweep.size() == 100 && inside >= 99,
            "Monte-Carlo sweep within 4 sigma: " + std::to_string(inside) + "/" +
                std::to_string(sweep.size()));

    const auto steane = steane_scheme(false).matrix;
    const auto steane_sh = steane_scheme(true).matrix;
    c.check(steane(0, 0) == 294 && steane(1, 1) == 84 && steane(0, 1) == 3702,
            "steane matrix (294, 84, 3702)");
    c.check(steane_sh(0, 0) == 114 && steane_sh(1, 1) == 27 && steane_sh(0, 1) == 564,
            "steane-shared matrix (114, 27, 564)");

    std::printf("%s\n", c.failures == 0 ? "all checks passed" : "validation FAILED");
    return c.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Physical-qubit cost estimates for concatenated fault-tolerant schemes"};
    app.require_subcommand(1);
    std::string output;

    // estimate
    auto* est = app.add_subcommand("estimate", "cost of one workload at one level");
    SchemeOptions est_scheme;
    ProfileOptions est_profile;
    long est_k = 0;
    std::size_t replacement = 0;
    bool est_csv = false;
    add_scheme_options(est, est_scheme);
    add_profile_options(est, est_profile);
    est->add_option("--k", est_k, "concatenation level")->required();
    est->add_option("--replacement", replacement, "normal type replacing magic qubits in R");
    est->add_option("--output", output, "write the CSV row here");
    est->add_flag("--csv", est_csv, "print CSV instead of the summary");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "CSV series for plotting");
    std::string kind = "k-sweep";
    std::vector<std::string> schemes{"steane", "steane-shared", "flag", "flag-shared"};
    SchemeOptions sweep_scheme;
    ProfileOptions sweep_profile;
    sweep_profile.magic_fraction = "0.05";
    long k_min = 1;
    long k_max = 5;
    std::string delta_min = "0";
    std::string delta_max = "1";
    long points = 101;
    std::vector<long> levels{1, 2, 3, 4, 5};
    std::string ratio_min = "0";
    std::string ratio_max = "2";
    std::vector<std::string> phase_shares{"0.1", "1"};
    std::string b_value = "10";
    sweep->add_option("--kind", kind, "k-sweep | delta-sweep | phase")
        ->check(CLI::IsMember({"k-sweep", "delta-sweep", "phase"}));
    sweep->add_option("--schemes", schemes, "schemes for k-sweep")->delimiter(',');
    sweep->add_option("--config", sweep_scheme.config, "extra scheme-config file for k-sweep");
    sweep->add_flag("--shared", sweep_scheme.shared, "shared multiplicities for --config");
    sweep->add_flag("--exact", sweep_scheme.exact, "keep rational matrix entries");
    add_profile_options(sweep, sweep_profile);
    sweep->add_option("--k-min", k_min, "first level");
    sweep->add_option("--k-max", k_max, "last level");
    sweep->add_option("--delta-min", delta_min, "delta-sweep start");
    sweep->add_option("--delta-max", delta_max, "delta-sweep end");
    sweep->add_option("--points", points, "grid points for delta-sweep and phase");
    sweep->add_option("--levels", levels, "levels for delta-sweep")->delimiter(',');
    sweep->add_option("--ratio-min", ratio_min, "phase: first lambda_m/lambda_n");
    sweep->add_option("--ratio-max", ratio_max, "phase: last lambda_m/lambda_n");
    sweep->add_option("--shares", phase_shares, "phase: magic shares")->delimiter(',');
    sweep->add_option("--b", b_value, "phase: b in units of lambda_n");
    sweep->add_option("--output", output, "CSV file (default stdout)");

    // multiplicity
    auto* mult = app.add_subcommand("multiplicity", "time and failure multiplicities");
    std::string mult_scheme = "steane";
    std::string mult_config;
    std::string bound = "1e-31";
    bool no_shared = false;
    long V = 100;
    long N_fault = 0;
    long M_per_exrec = 8;
    std::string p_text = "2e-5";
    std::string kappa_text = "0.01";
    mult->add_option("--scheme", mult_scheme, "steane | flag");
    mult->add_option("--config", mult_config, "scheme-config JSON file");
    mult->add_option("--bound", bound, "lack-probability budget for shared preparation");
    mult->add_flag("--no-shared", no_shared, "skip the shared-preparation columns");
    mult->add_option("--V", V, "verified states needed per timestep");
    mult->add_option("--N", N_fault, "single state: fault locations");
    mult->add_option("--M", M_per_exrec, "single state: copies per exRec");
    mult->add_option("--p", p_text, "single state: physical error rate at threshold");
    mult->add_option("--kappa", kappa_text, "single state: threshold-degradation tolerance");

    // solve-k
    auto* solve = app.add_subcommand("solve-k", "smallest concatenation level for a budget");
    std::string p0 = "1e-6";
    std::string p_thres = "2e-5";
    std::string n_ops;
    std::string eps = "0.01";
    long t = 1;
    solve->add_option("--p0", p0, "physical error rate");
    solve->add_option("--p-thres", p_thres, "threshold");
    solve->add_option("--n-ops", n_ops, "logical operations")->required();
    solve->add_option("--eps", eps, "whole-algorithm failure budget");
    solve->add_option("--t", t, "correctable errors per block");

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "run the oracle suite");
    unsigned workers = 0;
    validate_cmd->add_option("--workers", workers, "Monte-Carlo threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (est->parsed()) {
            const Scheme scheme = load_scheme(est_scheme);
            const AlgorithmProfile profile = make_profile(est_profile);
            const CsvRow row = estimate_row(scheme, est_k, profile, replacement);
            const std::string csv = to_csv({row});
            if (!output.empty()) {
                emit(csv, output);
            }
            if (est_csv) {
                std::cout << csv;
            } else {
                std::cout << "scheme          " << row.scheme << "\n"
                          << "K               " << row.K << "\n"
                          << "magic share     " << format_count(row.share) << "\n"
                          << "q_phys_total    " << format_count(row.q_phys_total) << "\n"
                          << "q_per_logical   " << format_count(row.q_per_logical) << "\n"
                          << "ratio_R         " << format_count(row.ratio_R) << "\n"
                          << "phase           " << to_string(row.phase) << "\n"
                          << "cost matrix\n"
                          << describe_matrix(scheme.matrix);
            }
        } else if (sweep->parsed()) {
            if (kind == "k-sweep") {
                std::vector<Scheme> list;
                const Rounding rounding = sweep_scheme.exact ? Rounding::exact : Rounding::half_up;
                for (const auto& name : schemes) {
                    list.push_back(resolve_scheme(name, rounding));
                }
                if (!sweep_scheme.config.empty()) {
                    list.push_back(load_scheme(sweep_scheme));
                }
                emit(to_csv(k_sweep(list, k_min, k_max, make_profile(sweep_profile))), output);
            } else if (kind == "delta-sweep") {
                const auto grid = linear_grid(parse_number(delta_min, "--delta-min"),
                                              parse_number(delta_max, "--delta-max"), points);
                emit(to_csv(delta_sweep(grid, levels, make_profile(sweep_profile).Q_algo_total)),
                     output);
            } else {
                const auto grid = linear_grid(parse_number(ratio_min, "--ratio-min"),
                                              parse_number(ratio_max, "--ratio-max"), points);
                std::vector<Rational> shares;
                for (const auto& s : phase_shares) {
                    shares.push_back(parse_number(s, "--shares"));
                }
                emit(to_csv(phase_sweep(grid, shares, parse_number(b_value, "--b"))), output);
            }
        } else if (mult->parsed()) {
            const std::optional<long double> budget =
                no_shared ? std::nullopt
                          : std::optional<long double>(
                                to_long_double(parse_number(bound, "--bound")));
            if (N_fault > 0) {
                SchemeSpec single;
                single.name = "custom";
                single.code = {7, 1, ""};
                single.threshold.p_thres =
                    static_cast<double>(to_long_double(parse_number(p_text, "--p")));
                single.threshold.kappa =
                    static_cast<double>(to_long_double(parse_number(kappa_text, "--kappa")));
                single.states.push_back({"state", 0, 0, N_fault, M_per_exrec});
                std::cout << format_multiplicity_table(multiplicity_table(single, budget, V));
            } else {
                const SchemeSpec spec = !mult_config.empty()
                                            ? parse_scheme_config(read_file(mult_config))
                                        : mult_scheme == "flag" ? flag_spec(false)
                                        : mult_scheme == "steane"
                                            ? steane_spec()
                                            : throw DomainError("multiplicity tables exist for "
                                                                "steane and flag");
                std::cout << format_multiplicity_table(multiplicity_table(spec, budget, V));
            }
        } else if (solve->parsed()) {
            const long double p0_v = to_long_double(parse_number(p0, "--p0"));
            const long double pt = to_long_double(parse_number(p_thres, "--p-thres"));
            const long double n = to_long_double(parse_number(n_ops, "--n-ops"));
            const long double e = to_long_double(parse_number(eps, "--eps"));
            const long K = t == 1 ? required_level(p0_v, pt, n, e)
                                  : required_level(p0_v, std::pow(pt, -static_cast<long double>(t)),
                                                   t, n, e);
            std::cout << K << "\n";
        } else if (validate_cmd->parsed()) {
            return run_validate(seed_from_env(), workers);
        }
    } catch (const ftcost::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
