#pragma once

#include "hwtau/laurent.hpp"
#include "hwtau/report.hpp"
#include "hwtau/weights.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hwtau {

// Truncated adapted bases at a rational point:
//   w_k(z)  = sum_{j <= k-1} h_{k-j-1}(beta^{-1} s) rho_{-j-1} z^j,
//   w*_k(z) = sum_{j <= k-1} h_{k-j-1}(-beta^{-1} s) rho_j^{-1} z^j,
// for k in [k_lo, k_hi], each known exactly for exponents >= -depth.
struct BasisWindow {
    WeightFamily family;
    EvalPoint point;
    std::vector<Rational> s;
    int k_lo = 0;
    int k_hi = 0;
    int depth = 0;
    std::map<int, LaurentWindow> w;
    std::map<int, LaurentWindow> w_dual;
    std::vector<Rational> h_plus;   // h_n(beta^{-1} s)
    std::vector<Rational> h_minus;  // h_n(-beta^{-1} s)

    int lo() const { return -depth; }
    bool has(int k) const { return k >= k_lo && k <= k_hi; }
    // Support L of s (index of the last nonzero entry).
    int support() const;

    const LaurentWindow& wk(int k) const;
    const LaurentWindow& wk_dual(int k) const;
    // Psi+_k = gamma w_{1-k}, Psi-_k = w*_{1-k}, kept as series in z = 1/x.
    LaurentWindow psi_plus(int k) const;
    LaurentWindow psi_minus(int k) const;
    // h_n(+-beta^{-1} s), zero for n < 0.
    Rational h(int sign, int n) const;
    Rational G(int j) const { return G_at(family, j, point); }
};

BasisWindow build_basis(const WeightFamily& f, const EvalPoint& pt, const std::vector<Rational>& s, int k_lo,
                        int k_hi, int depth);

// Same construction with rho_j replaced by factor * rho_j (negative controls).
BasisWindow build_basis_corrupted(const WeightFamily& f, const EvalPoint& pt, const std::vector<Rational>& s,
                                  int k_lo, int k_hi, int depth, int j, const Rational& factor);

// Operators on windows. z^i -> ... per monomial; the window moves with the z-shift.
LaurentWindow euler_op(const LaurentWindow& f);                          // D = z d/dz
LaurentWindow ladder_R(const BasisWindow& b, const LaurentWindow& f);     // (gamma/z) G(-beta D)
LaurentWindow ladder_R_dual(const BasisWindow& b, const LaurentWindow& f);  // (gamma/z) G(beta D)
LaurentWindow raise_a(const BasisWindow& b, const LaurentWindow& f);      // 1/R
LaurentWindow raise_a_dual(const BasisWindow& b, const LaurentWindow& f);  // 1/R*
// S(op) f with S(z) = sum k s_k z^k.
LaurentWindow apply_S(const BasisWindow& b, const std::function<LaurentWindow(const LaurentWindow&)>& op,
                      const LaurentWindow& f);

// Residue pairing <w_j, w*_l>; throws OutOfWindowError listing pairs whose residue is not determined.
CheckReport pairing_check(const BasisWindow& b);

// Q+_{ij} = sum_{k=i-1}^{j} G(k beta) h_{k-i+1}(beta^{-1}s) h_{j-k}(-beta^{-1}s)
Rational Q_plus(const BasisWindow& b, int i, int j);
// Q-_{ij} = sum_{k=i-1}^{j} G(-k beta) h_{j-k}(beta^{-1}s) h_{k-i+1}(-beta^{-1}s)
Rational Q_minus(const BasisWindow& b, int i, int j);

// General dressing-matrix entries g_{ij} = rho_i h_{i-j}(beta^{-1}s), g^{-1}_{ij} = rho_j^{-1} h_{i-j}(-beta^{-1}s).
Rational g_entry(const BasisWindow& b, int i, int j);
Rational g_inv_entry(const BasisWindow& b, int i, int j);
// Q~+_{kj} = sum_{i=-k-1}^{-j} g^{-1}_{-j,i} g_{i+1,-k};  Q~-_{kj} = sum_{i=j-2}^{k-1} g^{-1}_{k-1,i} g_{i+1,j-1}.
Rational Q_tilde_plus(const BasisWindow& b, int k, int j);
Rational Q_tilde_minus(const BasisWindow& b, int k, int j);

struct RecursionMatrices {
    int band = 0;  // columns j in [i-1, i-1+band]
    std::map<std::pair<int, int>, Rational> q_plus;
    std::map<std::pair<int, int>, Rational> q_minus;
    CheckReport report;
};

// Q+/Q- on the rows whose Psi is in range, verified as (z/gamma) Psi+_i = sum_j Q+_{ij} Psi+_j
// and likewise for Psi-. FiniteC uses band L*M; other families need band_cutoff >= 0.
RecursionMatrices recursion_Q(const BasisWindow& b, int band_cutoff = -1);

// Q+_{kj} = gamma^{-1} Q~-_{jk} on [plus_lo, plus_lo+size) and Q-_{kj} = gamma^{-1} Q~+_{jk}
// on [minus_lo, minus_lo+size); also g g^{-1} = 1 on both index ranges.
CheckReport q_tilde_crosscheck(const BasisWindow& b, int plus_lo, int minus_lo, int size = 6);

// P~+-_{ij} = (i-1) delta_ij -+ beta^{-1} (i-j) s_{i-j} for i >= j.
Rational P_tilde(const BasisWindow& b, int sign, int i, int j);
// Psi-form matrix: beta D Psi+-_k = sum_j P+-_{kj} Psi+-_j with P+-_{kj} = -beta P~+-_{1-k,1-j}.
Rational P_psi(const BasisWindow& b, int sign, int k, int j);

// D w_k = sum P~+_{kj} w_j, D w*_k = sum P~-_{kj} w*_j, and the Psi forms with D_x = -D.
CheckReport euler_P(const BasisWindow& b);

// R w_k = w_{k-1}, R^2 w_k = w_{k-2}, and the duals.
CheckReport ladder_check(const BasisWindow& b);

// a = 1/R, b = D + beta^{-1} S(R), c = R b, c_N = c - N R, [c,a] = 1, and the duals
// a* = 1/R*, b* = D - beta^{-1} S(R*), c* = R* b*, c*_N = c* - N R*.
CheckReport kac_schwarz_check(const BasisWindow& b, const std::vector<int>& charges = {-1, 0, 1, 2});

struct CurveResiduals {
    std::map<std::string, LaurentWindow> residuals;
    CheckReport report;
};

// (beta D + S(R)) w_k - (k-1) beta w_k, (beta D - S(R*)) w*_k - (k-1) beta w*_k for all k,
// the Psi-forms [beta D_x -+ S(R_+-)] Psi+-_k - k beta Psi+-_k, and the k = 0 quantum curves.
CurveResiduals quantum_curve_residual(const BasisWindow& b);

// Bivariate polynomial in (x, y), keyed by (deg_x, deg_y).
struct Bivariate {
    std::map<std::pair<int, int>, Rational> coeffs;
    std::string str() const;
};

// P(x,y) = xy - S(gamma x G(xy)) for polynomial G; ConfigError otherwise.
Bivariate classical_curve(const WeightFamily& f, const std::vector<Rational>& s, const Rational& gamma);
// Printed curve for every family; transcendental G appears symbolically.
std::string classical_curve_text(const WeightFamily& f, const std::vector<Rational>& s, const Rational& gamma);

// All of the above for one basis window.
CheckReport basis_suite(const BasisWindow& b);

}  // namespace hwtau
