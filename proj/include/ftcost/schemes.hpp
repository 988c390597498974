#pragma once

#include "ftcost/model.hpp"
#include "ftcost/numeric.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace ftcost {

enum class SchemeKind { component, raw, flag, toy };

/// A resolved scheme: its cost matrix plus where it came from.
struct Scheme {
    std::string name;
    SchemeKind kind = SchemeKind::component;
    CostMatrix matrix;
    std::optional<SchemeSpec> spec;
    /// Set for toy schemes.
    std::optional<Rational> delta;
    bool shared = false;
};

/// 7-qubit code with the Steane EC gadget.
SchemeSpec steane_spec();
Scheme steane_scheme(bool shared, Rounding rounding = Rounding::half_up);

struct FlagParams {
    Rational mu_0plus = 3;
    Rational mu_H = 4;
    long r_s = 2;
    long r_H = 2;

    Rational beta() const { return 2 + 3 * r_s; }
    Rational K1() const { return r_H * mu_H; }
    Rational K2() const { return (1 + r_H) * mu_H; }
    Rational lambda_n() const { return 11 * mu_0plus + 3 * r_s; }
    Rational lambda_m() const { return 6 * K1() + K2(); }
};

FlagParams flag_params(bool shared);
CostMatrix flag_matrix(const FlagParams& params, Rounding rounding = Rounding::half_up);
SchemeSpec flag_spec(bool shared);
Scheme flag_scheme(bool shared, Rounding rounding = Rounding::half_up);

/// 39^K Q_n + ((82 60^K - 65 39^K - 2 0^K) / 15) Q_m. The 0^K term, from the
/// zero eigenvalue, matters only at K = 0.
Rational flag_cost_closed_form(long K, const Rational& Q_n, const Rational& Q_m);
Rational flag_ratio(long K, const Rational& magic_share);

struct ToyLambdas {
    long double lambda_n;
    long double lambda_m;
    long double b;
};

struct ToyLambdasExact {
    Rational lambda_n;
    Rational lambda_m;
    Rational b;
};

ToyLambdas toy_params(long double delta);
ToyLambdasExact toy_params_exact(const Rational& delta);
CostMatrix toy_matrix(const Rational& delta);
Scheme toy_scheme(const Rational& delta);

/// Per-logical-qubit cost when every logical qubit is magic.
long double toy_cost_per_logical(long double delta, long K);
long double toy_ratio(long double delta, long K);

/// (a^K - c^K) / (a - c) in floating point, switching to the geometric sum
/// near a == c.
long double divided_power_difference(long double a, long double c, long K);

/// Resolves `steane`, `steane-shared`, `flag`, `flag-shared`, `toy:<delta>`
/// (delta as a decimal or an a/b fraction).
Scheme resolve_scheme(std::string_view name, Rounding rounding = Rounding::half_up);

/// Builds a scheme from a parsed config, deriving multiplicities.
Scheme scheme_from_spec(const SchemeSpec& spec, bool shared, Rounding rounding = Rounding::half_up);

}  // namespace ftcost
