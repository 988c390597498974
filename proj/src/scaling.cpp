#include "ftcost/scaling.hpp"

#include "ftcost/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace ftcost {

namespace {

void check_dims(const CostMatrix& M, const std::vector<Rational>& Q)
{
    if (Q.size() != M.size()) {
        throw DimensionError("vector of length " + std::to_string(Q.size()) +
                             " does not match a " + std::to_string(M.size()) + "x" +
                             std::to_string(M.size()) + " cost matrix");
    }
}

void check_level(long K)
{
    if (K < 0) {
        throw DomainError("K must be >= 0");
    }
}

Eigen::MatrixXd to_eigen(const CostMatrix& M, std::size_t first, std::size_t count)
{
    Eigen::MatrixXd out(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(count));
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                static_cast<double>(to_long_double(M(first + i, first + j)));
        }
    }
    return out;
}

std::vector<std::complex<double>> spectrum(const Eigen::MatrixXd& A)
{
    std::vector<std::complex<double>> out;
    if (A.size() == 0) {
        return out;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(A, false);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        out.push_back(solver.eigenvalues()[i]);
    }
    return out;
}

double spectral_radius(const std::vector<std::complex<double>>& values)
{
    double r = 0;
    for (const auto& v : values) {
        r = std::max(r, std::abs(v));
    }
    return r;
}

}  // namespace

std::vector<Rational> iterate_recursion(const CostMatrix& M, long K, const std::vector<Rational>& Q)
{
    check_dims(M, Q);
    check_level(K);
    std::vector<Rational> v = Q;
    const std::size_t dim = M.size();
    for (long k = 0; k < K; ++k) {
        std::vector<Rational> next(dim, Rational(0));
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                if (M(i, j) != 0 && v[j] != 0) {
                    next[i] += M(i, j) * v[j];
                }
            }
        }
        v = std::move(next);
    }
    return v;
}

Rational total(const std::vector<Rational>& v)
{
    Rational sum = 0;
    for (const auto& x : v) {
        sum += x;
    }
    return sum;
}

Rational divided_power_difference(const Rational& a, const Rational& c, long K)
{
    check_level(K);
    if (K == 0) {
        return 0;
    }
    if (a == c) {
        return K * pow(a, static_cast<unsigned>(K - 1));
    }
    return (pow(a, static_cast<unsigned>(K)) - pow(c, static_cast<unsigned>(K))) / (a - c);
}

Rational qubit_cost_closed_form(const Rational& lambda_n, const Rational& lambda_m,
                                const Rational& b, long K, const Rational& Q_n,
                                const Rational& Q_m)
{
    check_level(K);
    const auto k = static_cast<unsigned>(K);
    return pow(lambda_n, k) * Q_n +
           (pow(lambda_m, k) + b * divided_power_difference(lambda_n, lambda_m, K)) * Q_m;
}

Rational ratio_R(const Rational& lambda_n, const Rational& lambda_m, const Rational& b, long K,
                 const Rational& magic_share)
{
    check_level(K);
    if (magic_share < 0 || magic_share > 1) {
        throw DomainError("magic share must lie in [0,1]");
    }
    if (lambda_n <= 0) {
        throw DomainError("lambda_normal must be positive");
    }
    const Rational denom = pow(lambda_n, static_cast<unsigned>(K));
    return qubit_cost_closed_form(lambda_n, lambda_m, b, K, 1 - magic_share, magic_share) / denom;
}

std::optional<Rational> asymptotic_ratio(const Rational& lambda_n, const Rational& lambda_m,
                                         const Rational& b, const Rational& magic_share)
{
    if (lambda_n > lambda_m) {
        return (1 - magic_share) + b / (lambda_n - lambda_m) * magic_share;
    }
    return std::nullopt;
}

Phase classify_phase(const Rational& lambda_n, const Rational& lambda_m)
{
    if (lambda_m < lambda_n) {
        return Phase::subcritical;
    }
    if (lambda_m == lambda_n) {
        return Phase::critical;
    }
    return Phase::supercritical;
}

std::vector<std::complex<double>> eigenvalues(const CostMatrix& M)
{
    return spectrum(to_eigen(M, 0, M.size()));
}

std::vector<std::complex<double>> eigenvalues_normal_block(const CostMatrix& M)
{
    return spectrum(to_eigen(M, 0, M.j_normal()));
}

std::vector<std::complex<double>> eigenvalues_magic_block(const CostMatrix& M)
{
    return spectrum(to_eigen(M, M.j_normal(), M.j_magic()));
}

Phase classify_phase(const CostMatrix& M)
{
    if (M.j_magic() == 0) {
        return Phase::subcritical;
    }
    if (M.j_normal() == 1 && M.j_magic() == 1) {
        return classify_phase(M(0, 0), M(1, 1));
    }
    const double rn = spectral_radius(eigenvalues_normal_block(M));
    const double rm = spectral_radius(eigenvalues_magic_block(M));
    const double tol = 1e-10 * std::max({1.0, rn, rm});
    if (std::abs(rn - rm) <= tol) {
        return Phase::critical;
    }
    return rm < rn ? Phase::subcritical : Phase::supercritical;
}

GeneralCost qubit_cost_general(const CostMatrix& M, long K, const std::vector<Rational>& Q)
{
    GeneralCost out;
    out.per_type = iterate_recursion(M, K, Q);
    out.total = total(out.per_type);

    const Eigen::MatrixXd A = to_eigen(M, 0, M.size());
    Eigen::EigenSolver<Eigen::MatrixXd> solver(A, true);
    if (solver.info() != Eigen::Success) {
        return out;
    }
    const auto& values = solver.eigenvalues();
    const auto& vectors = solver.eigenvectors();
    // Diagonalizable with separated spectrum: distinct eigenvalues and a
    // well conditioned eigenvector basis.
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        for (Eigen::Index j = i + 1; j < values.size(); ++j) {
            const double scale = std::max({1.0, std::abs(values[i]), std::abs(values[j])});
            if (std::abs(values[i] - values[j]) <= 1e-8 * scale) {
                return out;
            }
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(vectors);
    if (!lu.isInvertible()) {
        return out;
    }
    Eigen::VectorXcd q(static_cast<Eigen::Index>(Q.size()));
    for (std::size_t i = 0; i < Q.size(); ++i) {
        q(static_cast<Eigen::Index>(i)) = static_cast<double>(to_long_double(Q[i]));
    }
    Eigen::VectorXcd coeff = lu.solve(q);
    for (Eigen::Index i = 0; i < coeff.size(); ++i) {
        coeff(i) *= std::pow(values[i], static_cast<double>(K));
    }
    const Eigen::VectorXcd result = vectors * coeff;
    double sum = 0;
    for (Eigen::Index i = 0; i < result.size(); ++i) {
        sum += result(i).real();
    }
    out.eigen_total = sum;
    const double exact = static_cast<double>(to_long_double(out.total));
    out.eigen_agrees = std::abs(sum - exact) <= 1e-6 * std::max(1.0, std::abs(exact));
    return out;
}

std::vector<Rational> fictitious_counts(const CostMatrix& M, const std::vector<Rational>& Q,
                                        std::size_t m)
{
    check_dims(M, Q);
    if (m >= M.j_normal()) {
        throw DomainError("replacement type must index a normal type");
    }
    std::vector<Rational> out = Q;
    for (std::size_t i = M.j_normal(); i < M.size(); ++i) {
        out[m] += out[i];
        out[i] = 0;
    }
    return out;
}

Rational ratio_R_general(const CostMatrix& M, long K, const std::vector<Rational>& Q,
                         std::size_t m)
{
    const auto fict = fictitious_counts(M, Q, m);
    const Rational denom = total(iterate_recursion(M, K, fict));
    if (denom == 0) {
        throw DomainError("all-normal cost is zero; ratio undefined");
    }
    return total(iterate_recursion(M, K, Q)) / denom;
}

}  // namespace ftcost
