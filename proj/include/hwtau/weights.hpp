#pragma once

#include "hwtau/partitions.hpp"
#include "hwtau/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hwtau {

enum class FamilyKind { FiniteC, DualFiniteC, Exponential, Quantum };

// Weight generating function: G(z) = prod(1 + c_i z) (FiniteC),
// prod(1 - c_i z)^{-1} (DualFiniteC), e^z (Exponential), prod_{i>=1}(1 + q^i z) (Quantum).
struct WeightFamily {
    FamilyKind kind = FamilyKind::FiniteC;
    std::vector<Rational> c;
    Rational q;
    std::string label;

    static WeightFamily finite(std::vector<Rational> c, std::string label = "");
    static WeightFamily dual(std::vector<Rational> c, std::string label = "");
    static WeightFamily exponential();
    static WeightFamily quantum(const Rational& q);
    static WeightFamily trivial() { return finite({}, "trivial"); }
    static WeightFamily belyi() { return finite({Rational(1)}, "belyi"); }
    static WeightFamily signed_hurwitz() { return dual({Rational(1)}, "signed"); }

    bool is_polynomial() const { return kind == FamilyKind::FiniteC; }
    // Degree M of G for FiniteC.
    int degree() const;
    std::string describe() const;
};

// Taylor coefficient of z^i in the family's generating function.
Rational g_coeff(const WeightFamily& f, int i);

// G(j beta) as a beta series.
BetaSeries r_factor(const WeightFamily& f, int j, int d_max);

struct ContentProduct {
    Partition lambda;
    int shift = 0;
    BetaSeries value;
};
ContentProduct content_product(const WeightFamily& f, const Partition& lambda, int shift, int d_max);

// Rational evaluation point. Exponential has no rational values G(j beta) at
// rational beta, so it needs an explicit rational value q_b standing for e^beta.
struct EvalPoint {
    Rational beta = 1;
    Rational gamma = 1;
    std::optional<Rational> exp_beta;
};

// G(j beta) at a rational point; throws ConfigError when not exactly evaluable
// and SingularParameterError for a pole of a dual family.
Rational G_at(const WeightFamily& f, int j, const EvalPoint& pt);
bool exactly_evaluable(const WeightFamily& f, const EvalPoint& pt);

// rho_j = gamma^j prod_{i=1}^j G(i beta), rho_{-j} = gamma^{-j} prod_{i=0}^{j-1} G(-i beta)^{-1}.
Rational rho(const WeightFamily& f, int j, const EvalPoint& pt);

// gamma-free rho_j as a beta series: prod_{i=1}^j G(i beta) or prod_{i=0}^{-j-1} 1/G(-i beta).
BetaSeries rho_series(const WeightFamily& f, int j, int d_max);

// A_1..A_kmax with log G(z) = sum_k (-1)^{k+1} A_k z^k; index 0 is unused and zero.
std::vector<Rational> log_A_coeffs(const WeightFamily& f, int k_max);

// Coefficients a_0..a_{k+1} of p_k(x), with p_k(x) - p_k(x-1) = x^k and p_k(0) = 0.
std::vector<Rational> pk_poly(int k);
Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x);

// Weight attached to a multiset of branch profiles with colength vector lambda:
// m_lambda(c) for FiniteC, f_lambda(c) for DualFiniteC and the corresponding limits.
Rational profile_weight(const WeightFamily& f, const Partition& lambda);

// prod_i g_{lambda_i}: e_lambda(c) for FiniteC, h_lambda(c) for DualFiniteC.
Rational path_weight(const WeightFamily& f, const Partition& lambda);

}  // namespace hwtau
