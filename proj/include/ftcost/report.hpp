#pragma once

#include "ftcost/model.hpp"
#include "ftcost/multiplicity.hpp"
#include "ftcost/schemes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ftcost {

/// Physical cost of `profile` on `scheme` at level K. Algorithm magic
/// qubits land on the first magic type; `replacement` picks the normal type
/// that stands in for them in the ratio denominator.
EstimateResult estimate(const Scheme& scheme, long K, const AlgorithmProfile& profile,
                        std::size_t replacement = 0);

struct CsvRow {
    std::string scheme;
    long K = 0;
    Rational share;
    Rational q_phys_total;
    Rational q_per_logical;
    Rational ratio_R;
    /// Floating values for rows whose closed form is evaluated in floating point.
    std::optional<long double> q_phys_total_fp;
    std::optional<long double> q_per_logical_fp;
    std::optional<long double> ratio_R_fp;
    Phase phase = Phase::subcritical;
};

inline constexpr const char* csv_header = "scheme,K,share,q_phys_total,q_per_logical,ratio_R,phase";

CsvRow estimate_row(const Scheme& scheme, long K, const AlgorithmProfile& profile,
                    std::size_t replacement = 0);
std::string to_csv_line(const CsvRow& row);
std::string to_csv(const std::vector<CsvRow>& rows);

/// For every scheme and K in [K_min, K_max]: one row at the profile's share
/// and one all-normal row (share 0).
std::vector<CsvRow> k_sweep(const std::vector<Scheme>& schemes, long K_min, long K_max,
                            const AlgorithmProfile& profile);

/// Toy model on a delta grid for each K in `levels`, worst case share 1.
std::vector<CsvRow> delta_sweep(const std::vector<Rational>& deltas, const std::vector<long>& levels,
                                const Rational& logical_qubits);

struct PhaseRow {
    Rational lambda_ratio;
    Rational share;
    /// 1 / R(K -> infinity); zero when R diverges.
    Rational inverse_R_inf;
    Phase phase;
};

inline constexpr const char* phase_csv_header = "lambda_ratio,share,inv_R_inf,phase";

/// lambda_n is fixed at 1 and b is given in those units.
std::vector<PhaseRow> phase_sweep(const std::vector<Rational>& lambda_ratios,
                                  const std::vector<Rational>& shares, const Rational& b);
std::string to_csv(const std::vector<PhaseRow>& rows);

struct MultiplicityRow {
    std::string state;
    long N_fault;
    long double Np;
    long M_per_exrec;
    long mu_independent;
    /// Value used by the scheme when it differs from the formula.
    std::optional<long> mu_pinned;
    std::optional<long> spares;
    std::optional<Rational> mu_shared;
    std::optional<Rational> mu_shared_pinned;
};

/// Table of multiplicities for every state of `spec`. When `bound` is given,
/// spares are solved for with V verified states per timestep.
std::vector<MultiplicityRow> multiplicity_table(const SchemeSpec& spec,
                                                std::optional<long double> bound, long V = 100);
std::string format_multiplicity_table(const std::vector<MultiplicityRow>& rows);

/// `points` evenly spaced values from `first` to `last` inclusive.
std::vector<Rational> linear_grid(const Rational& first, const Rational& last, long points);

}  // namespace ftcost
