#pragma once

#include "ftcost/model.hpp"
#include "ftcost/numeric.hpp"

#include <vector>

namespace ftcost {

struct TimingBundle {
    double tau_L = 1;
    double tau_anc = 1;
    double tau_G = 1;
    double tau_M = 1;
};

struct SharedPrepBudget {
    long V = 100;
    long S = 0;
    long double bound = 1e-31L;
    long double N_gates_level1 = 0;
    long alpha = 1;
};

/// tau_L = (1 + sum d_i + d_R) * g, in units of tau_phys.
double ec_cycle_time(const ECGadgetSpec& ec);

/// max_i(tau_i + d_i * tau_G + tau_M).
double ec_ancilla_busy_time(const std::vector<double>& prep_durations, const std::vector<long>& d,
                            double tau_M, double tau_G = 1);

/// ceil(tau_anc / tau_between), at least 1.
long time_multiplicity(double tau_anc, double tau_between);

/// N * p; RegimeError when N * p >= 1.
long double verification_failure_bound(long N_fault, long double p);

/// (N p)^mu.
long double lack_probability_independent(long N_fault, long double p, long mu);

/// Smallest integer mu >= ln(M B / kappa) / ln(B / N).
long failure_multiplicity_independent(long N_fault, long M_per_exrec, long double B,
                                      long double kappa);

/// True iff B p_k^2 + M p_lack <= (1 + kappa) B p_k^2.
bool threshold_degradation_check(long double p_k, long double B, long M, long double p_lack,
                                 long double kappa);

/// Probability that more than S of V+S preparations fail, each failing with
/// probability N p. Log-space, accurate to a few digits far below 1e-40.
long double shared_tail(long V, long S, long N_fault, long double p);

/// Q_phys(K-1) * D^(K-1) * 2 D_L.
long double level1_gate_count(long double Q_phys_Kminus1, long double D, long K, long double D_L);

/// kappa / (K M N_gates).
long double shared_budget(long double kappa, long K, long M, long double N_gates_level1);

/// Smallest S >= 0 with shared_tail(V, S, N, p) <= bound.
long shared_spares(long V, long N_fault, long double p, long double bound);

/// (V + S) / V exactly.
Rational failure_multiplicity_shared(long V, long S);

/// Multiplicities for every state of a component-level spec. Pinned values
/// on the states win; missing independent mu values come from the threshold
/// parameters. Shared mode needs `mu_shared` on every referenced state unless
/// a budget is given, in which case spares are solved for.
Multiplicities multiplicities_for(const SchemeSpec& spec, MultiplicityMode mode,
                                  const SharedPrepBudget* budget = nullptr);

}  // namespace ftcost
