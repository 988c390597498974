#pragma once

#include "ftcost/model.hpp"
#include "ftcost/numeric.hpp"

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace ftcost {

/// Exact M^K Q by repeated matrix-vector products.
std::vector<Rational> iterate_recursion(const CostMatrix& M, long K, const std::vector<Rational>& Q);

Rational total(const std::vector<Rational>& v);

/// (a^K - c^K) / (a - c), or its limit K a^(K-1) when a == c.
Rational divided_power_difference(const Rational& a, const Rational& c, long K);

/// Physical qubits for Q_n normal and Q_m magic logical qubits under the
/// 2x2 cost matrix [[lambda_n, b], [0, lambda_m]].
Rational qubit_cost_closed_form(const Rational& lambda_n, const Rational& lambda_m,
                                const Rational& b, long K, const Rational& Q_n,
                                const Rational& Q_m);

/// Cost of the real workload over the all-normal workload of the same size.
Rational ratio_R(const Rational& lambda_n, const Rational& lambda_m, const Rational& b, long K,
                 const Rational& magic_share);

/// K -> infinity limit of ratio_R; nullopt when it diverges.
std::optional<Rational> asymptotic_ratio(const Rational& lambda_n, const Rational& lambda_m,
                                         const Rational& b, const Rational& magic_share);

Phase classify_phase(const Rational& lambda_n, const Rational& lambda_m);

/// Phase of a general matrix from the spectral radii of its diagonal blocks.
Phase classify_phase(const CostMatrix& M);

std::vector<std::complex<double>> eigenvalues(const CostMatrix& M);
std::vector<std::complex<double>> eigenvalues_normal_block(const CostMatrix& M);
std::vector<std::complex<double>> eigenvalues_magic_block(const CostMatrix& M);

struct GeneralCost {
    std::vector<Rational> per_type;
    Rational total;
    /// Total through the eigen decomposition, when M is diagonalizable with
    /// well separated eigenvalues.
    std::optional<double> eigen_total;
    /// False when the eigen path disagrees with the exact path.
    bool eigen_agrees = true;
};

GeneralCost qubit_cost_general(const CostMatrix& M, long K, const std::vector<Rational>& Q);

/// Q_algo with all magic counts moved onto normal type `m`.
std::vector<Rational> fictitious_counts(const CostMatrix& M, const std::vector<Rational>& Q,
                                        std::size_t m);

/// General ratio; `m` picks the normal type that replaces magic qubits.
Rational ratio_R_general(const CostMatrix& M, long K, const std::vector<Rational>& Q,
                         std::size_t m);

}  // namespace ftcost
