#pragma once

#include "ftcost/numeric.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ftcost {

struct CodeParams {
    long n = 1;
    long t = 1;
    /// State whose fault-tolerant preparation produces a fresh logical qubit.
    std::string data_state;

    bool operator==(const CodeParams&) const = default;
};

struct ThresholdParams {
    double p_thres = 2e-5;
    double kappa = 0.01;

    /// B = p_thres^(-t).
    long double B(long t) const;

    bool operator==(const ThresholdParams&) const = default;
};

struct StatePrepSpec {
    std::string name;
    long n_carrier = 0;
    long v_anc = 0;
    long N_fault = 1;
    long M_per_exrec = 1;
    std::optional<double> prep_duration;
    /// Optional pinned multiplicities; omitted values are derived.
    std::optional<long> r;
    std::optional<long> mu;
    std::optional<Rational> mu_shared;

    bool operator==(const StatePrepSpec&) const = default;
};

struct SyndromeEntry {
    std::string state;
    long d = 0;

    bool operator==(const SyndromeEntry&) const = default;
};

struct ECGadgetSpec {
    std::vector<SyndromeEntry> syndromes;
    long d_R = 0;
    long g = 1;
    long m = 1;

    std::size_t I_S() const { return syndromes.size(); }

    bool operator==(const ECGadgetSpec&) const = default;
};

struct MagicGadgetSpec {
    std::string state;
    /// States whose preparation is nested inside the magic-state preparation.
    std::vector<std::string> helpers;
    long r_A = 1;
    long injection_steps = 2;

    bool operator==(const MagicGadgetSpec&) const = default;
};

/// Labeled square matrix, block upper triangular: `j_normal` normal types
/// first, then magic types, with a zero magic-to-normal block.
class CostMatrix {
public:
    CostMatrix() = default;
    /// Throws DimensionError on shape problems and DomainError on negative
    /// entries or a nonzero magic-to-normal block.
    CostMatrix(std::vector<std::string> labels, std::size_t j_normal,
               std::vector<std::vector<Rational>> entries);

    std::size_t size() const { return labels_.size(); }
    std::size_t j_normal() const { return j_normal_; }
    std::size_t j_magic() const { return size() - j_normal_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const std::vector<std::vector<Rational>>& entries() const { return entries_; }

    bool is_integral() const;
    /// Entries as integers; throws DomainError when some entry is fractional.
    std::vector<std::vector<BigInt>> integer_entries() const;

    bool operator==(const CostMatrix&) const = default;

private:
    std::vector<std::string> labels_;
    std::size_t j_normal_ = 0;
    std::vector<std::vector<Rational>> entries_;
};

struct SchemeSpec {
    std::string name;
    CodeParams code;
    ThresholdParams threshold;
    std::vector<StatePrepSpec> states;
    std::optional<ECGadgetSpec> ec_gadget;
    std::optional<MagicGadgetSpec> magic;
    std::optional<CostMatrix> raw_matrix;

    const StatePrepSpec& state(std::string_view name) const;
    const StatePrepSpec* find_state(std::string_view name) const;

    bool operator==(const SchemeSpec&) const = default;
};

enum class MultiplicityMode { independent, shared };

struct MultiplicityRecord {
    long r = 1;
    Rational mu = 1;
    MultiplicityMode mode = MultiplicityMode::independent;
};

/// Keyed by state name.
using Multiplicities = std::map<std::string, MultiplicityRecord, std::less<>>;

struct AlgorithmProfile {
    Rational Q_algo_total = 1;
    Rational magic_fraction = 0;
    /// Q_magic / Q_total; defaults to min(1, 2 * magic_fraction).
    std::optional<Rational> magic_share_override;
    double D_L = 1;
    double N_algo = 1;
    double epsilon_algo = 0.01;
    double p0 = 1e-6;

    Rational effective_magic_share() const;
};

enum class Phase { subcritical, critical, supercritical };

std::string_view to_string(Phase phase);
std::string_view to_string(MultiplicityMode mode);

struct EstimateResult {
    long K = 0;
    std::vector<Rational> Q_phys_per_type;
    Rational Q_phys_total;
    Rational R;
    Phase phase = Phase::subcritical;
};

enum class Rounding { half_up, exact };

/// Validates cross references and invariants; throws ConfigSemanticError.
void validate(const SchemeSpec& spec);

SchemeSpec parse_scheme_config(std::string_view document);
std::string serialize_scheme_config(const SchemeSpec& spec);

CostMatrix build_cost_matrix(const SchemeSpec& spec, const Multiplicities& mult,
                             Rounding rounding = Rounding::half_up);

}  // namespace ftcost
