#pragma once

#include "hwtau/graded_poly.hpp"
#include "hwtau/partitions.hpp"
#include "hwtau/report.hpp"
#include "hwtau/tau.hpp"
#include "hwtau/weights.hpp"

#include <map>
#include <string>
#include <vector>

namespace hwtau {

// Polynomial in t over Q.
using TPoly = std::map<ExpVec, Rational>;

// c * t^mult * d^deriv / dt^deriv
struct DiffTerm {
    ExpVec mult;
    ExpVec deriv;
    Rational coeff;
};

// Differential operator in the flow variables; each term shifts t-weight by grading_shift.
struct DiffOp {
    std::vector<DiffTerm> terms;
    int grading_shift = 0;

    TPoly apply(const TPoly& p) const;
    // Acts on the t-part only; s-exponents, grade and beta coefficients ride along.
    GradedPoly apply(const GradedPoly& p) const;
};

// Q_0 = sum k t_k d_k, Q_1, Q_2 in explicit bosonic form, restricted to weight <= w_max.
DiffOp build_Qk(int k, int w_max);

// Eigenvalue of Q_k on s_lambda: sum of contents^k (|lambda| for k = 0).
Rational diagonal_Qk(int k, const Partition& lambda);

// s_lambda in the t alphabet.
TPoly schur_t(const Partition& lambda);

// Q_k s_lambda = diagonal_Qk(k, lambda) s_lambda for k <= k_max, |lambda| <= n_max, and
// [Q_a, Q_b] = 0 for a, b <= k_max on every monomial of weight <= comm_weight.
CheckReport schur_eigen_check(int k_max = 2, int n_max = 6, int comm_weight = 8);

// tau from exp(sum_k (-1)^{k+1} beta^k A_k Q_k) exp(sum k t_k s_k) in diagonal form, k <= k_cut.
GradedPoly reconstruct_tau_diagonal(const WeightFamily& f, int w_max, int d_max, int k_cut);
// exp(beta Q_index) exp(sum k t_k s_k) in diagonal form.
GradedPoly exp_single_index(int index, int w_max, int d_max);
// exp(sum_{k <= 2} (-1)^{k+1} beta^k A_k Q_k) applied with the explicit operators.
GradedPoly reconstruct_tau_operator(const WeightFamily& f, int w_max, int d_max);

struct ReconstructResult {
    GradedPoly tau{0, 0};
    CheckReport report;
};
// Diagonal reconstruction against build_tau; for k <= 2 also the operator form against the
// diagonal form cut at k = 2, on weights <= min(w_max, op_weight).
ReconstructResult reconstruct_tau(const WeightFamily& f, int w_max, int d_max, int k_cut, int op_weight = 4);

// Which single index k makes exp(beta Q_k) exp(sum k t_k s_k) equal to the Exponential tau at gamma = 1.
struct IndexResolution {
    std::map<int, bool> holds;  // index -> agrees with build_tau
    int resolved = -1;          // the unique index that holds, or -1
    CheckReport report;
};
IndexResolution resolve_exp_index(int w_max, int d_max, const std::vector<int>& candidates = {1, 2});

// gamma d/dgamma tau = Q_0 tau, d/dA_k tau = (-1)^{k+1} beta^k Q_k tau (k = 1, 2 with explicit
// operators), beta d/dbeta tau = sum_k k A_k d/dA_k tau.
CheckReport pde_check(const WeightFamily& f, int w_max, int d_max);

// V_1 = sum k t_k d_{k-1}, V_2 = sum (k l t_k t_l d_{k+l-1} + (k+l+1) t_{k+l+1} d_k d_l).
DiffOp build_Vk(int k, int w_max);

// exp(gamma (t_1 + sum_{k<=M} g_k beta^k V_k)) 1 = tau(t, s = (1,0,0,..)) per gamma sector, M <= 2.
CheckReport single_rep_check(const WeightFamily& f, int w_max, int d_max);

}  // namespace hwtau
