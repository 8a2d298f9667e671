#pragma once

#include "hwtau/adapted_basis.hpp"
#include "hwtau/report.hpp"
#include "hwtau/tau.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hwtau {

// Two-variable Laurent data on the rectangle [z_lo, z_hi] x [w_lo, w_hi], expanded for |z| > |w|.
struct KernelWindow {
    int z_lo = 0;
    int z_hi = 0;
    int w_lo = 0;
    int w_hi = 0;
    std::map<std::pair<int, int>, Rational> cells;  // (z-exponent, w-exponent) -> coefficient
    std::map<std::pair<int, int>, int> j_cutoff;    // basis construction: largest j used per cell

    Rational at(int ez, int ew) const;
    std::string str() const;
};

// Cellwise equality; *mismatch names the first differing cell.
bool kernel_equal(const KernelWindow& a, const KernelWindow& b, std::string* mismatch = nullptr);

// tau(sum_j [w_j^{-1}] - sum_i [z_i^{-1}]) as a polynomial in z_1^{-1}..z_n^{-1}, w_1^{-1}..w_n^{-1};
// exponent vectors are (z_1, .., z_n, w_1, .., w_n), all <= 0.
std::map<std::vector<int>, Rational> tau_substituted(const EvaluatedTau& tau, int n);

// K~_2(z,w) = tau([w^{-1}] - [z^{-1}]) / (z - w). A cell is exact when -ez-ew-1 <= w_max.
KernelWindow K2_via_tau(const EvaluatedTau& tau, int z_lo, int z_hi, int w_lo, int w_hi);

// K~_2(z,w) = sum_{j>=1} w_j(w) w*_{1-j}(z); cell (ez, ew) takes j in [max(1, ew+1), -ez].
KernelWindow K2_via_basis(const BasisWindow& b, int z_lo, int z_hi, int w_lo, int w_hi);

// Christoffel-Darboux matrix A_{ij}, 0 <= i, j <= bound.
struct CDMatrix {
    int bound = 0;
    std::vector<std::vector<Rational>> A;        // sum_{k=-i}^{j} form
    std::vector<std::vector<Rational>> A_ghh;    // sum_{n=0}^{i+j} G(beta(j-n)) h h form
    bool forms_agree() const { return A == A_ghh; }
};
CDMatrix cd_matrix(const WeightFamily& f, const EvalPoint& pt, const std::vector<Rational>& s, int bound);

// A_{ij} = 0 for all LM < i+j <= LM + margin (FiniteC of degree M, s of support L).
CheckReport cd_finiteness(const WeightFamily& f, const EvalPoint& pt, const std::vector<Rational>& s,
                          int margin = 3);

// Numerator check (z-w) K~_2(z,w) = gamma * sum_{i,j} A_{ij} w_{1-i}(w) w*_{1-j}(z) against the
// tau substitution; and the x-form K(x,x') = sum A_{ij} Psi+_i(x) Psi-_j(x') / (x - x'),
// expanded for |x| > |x'|, against (x x')^{-1} K~_2(1/x', 1/x).
struct CDKernelResult {
    KernelWindow kernel_x;  // K(x, x'): x-exponents [p_lo, p_hi] in the z slot, x'-exponents [0, q_hi] in the w slot
    CheckReport report;
};
CDKernelResult cd_kernel(const BasisWindow& b, const EvaluatedTau& tau, int p_lo, int p_hi, int q_hi);

// A(r,t) = (r G(S(t) - beta t d/dt) - t G(S(r) + beta r d/dr)) 1/(r-t) for polynomial G;
// returns the coefficients of r^i t^j for i, j >= 0, i + j <= degree, and checks that
// negative powers of r cancel on the computed range.
struct GenAResult {
    std::map<std::pair<int, int>, Rational> coeffs;
    CheckReport report;
};
GenAResult gen_A(const WeightFamily& f, const EvalPoint& pt, const std::vector<Rational>& s, int degree);

// sum_{n} n^k h_n(-s) h_{N-n}(s) for k <= k_max, N <= N_max; must vanish for N > kL.
struct OrthogonalityResult {
    std::map<std::pair<int, int>, Rational> values;  // (k, N)
    int nonzero_below_bound = 0;
    CheckReport report;
};
OrthogonalityResult h_orthogonality(const std::vector<Rational>& s, int k_max, int N_max);

// n = 2 multipair correlator: tau(.. ) det(1/(z_i - w_j)) = det(K~_2(z_i, w_j)), cellwise on
// z-exponents [z_lo, -1]^2, w-exponents [w_lo, w_hi]^2; plus z_1 <-> z_2 antisymmetry.
CheckReport multipair_check(const EvaluatedTau& tau, int z_lo, int w_lo, int w_hi);

// Q~+_{01} = g_{00} g^{-1}_{-1,-1} = gamma.
CheckReport q_tilde_prefactor_check(const BasisWindow& b);

}  // namespace hwtau
