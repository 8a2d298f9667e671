#pragma once

#include "hwtau/graded_poly.hpp"
#include "hwtau/laurent.hpp"
#include "hwtau/weights.hpp"

#include <map>
#include <string>
#include <vector>

namespace hwtau {

enum class SConvention { plain, beta_rescaled };

// tau(t, s) = sum_lambda gamma^|lambda| r_lambda s_lambda(t) s_lambda(s), truncated at weight w_max
// and beta order d_max. The body is always stored in the plain convention; under
// beta_rescaled each s-monomial of degree l picks up beta^{-l} on extraction.
struct TauSeries {
    WeightFamily family;
    int w_max = 0;
    int d_max = 0;
    SConvention convention = SConvention::plain;
    GradedPoly body{0, 0};

    // Lowest beta power that can occur.
    int beta_offset() const { return convention == SConvention::beta_rescaled ? -w_max : 0; }
    BetaLaurent coeff(const ExpVec& t, const ExpVec& s, int grade) const;
};

// Applies the convention factor to a plain coefficient attached to s-exponents s.
BetaLaurent with_convention(const BetaSeries& c, const ExpVec& s, SConvention conv);

TauSeries build_tau(const WeightFamily& family, int w_max, int d_max, SConvention conv = SConvention::plain);

// log tau of the plain body (the convention commutes with log and is applied on extraction).
GradedPoly log_tau(const TauSeries& tau);

// tau(t, beta^{-1} s) at rational beta, gamma and a finite list s: a polynomial in t over Q.
struct EvaluatedTau {
    WeightFamily family;
    EvalPoint point;
    std::vector<Rational> s;
    int w_max = 0;
    std::map<ExpVec, Rational> coeffs;

    Rational coeff(const ExpVec& t) const;
};

EvaluatedTau evaluate_tau(const WeightFamily& family, const EvalPoint& pt, const std::vector<Rational>& s,
                          int w_max);

struct BakerPair {
    LaurentWindow minus;  // tau(-[z^{-1}]) / tau(0)
    LaurentWindow plus;   // tau(+[z^{-1}]) / tau(0)
};

// Baker function and its dual at t = 0, valid down to z^{-depth}.
BakerPair baker(const EvaluatedTau& tau, int depth);

// Residual of the KP bilinear identity, a polynomial in (t, dt, s) over beta series.
struct HirotaKey {
    ExpVec t;
    ExpVec dt;
    ExpVec s;
    int grade = 0;
    auto operator<=>(const HirotaKey&) const = default;
};

struct HirotaResidual {
    int probe_degree = 0;
    std::map<HirotaKey, BetaSeries> terms;
    bool is_zero() const { return terms.empty(); }
    std::string first_term() const;
};

HirotaResidual hirota_residual(const GradedPoly& tau_body, int probe_degree);
HirotaResidual hirota_residual(const TauSeries& tau, int probe_degree);

// Polynomial in x_1..x_n (plain exponent per variable) with s-monomials and gamma grade.
struct XKey {
    std::vector<int> x;
    ExpVec s;
    int grade = 0;
    auto operator<=>(const XKey&) const = default;
};

struct XPoly {
    int n = 0;
    std::map<XKey, BetaLaurent> terms;

    void add(const XKey& k, const BetaLaurent& v);
    // d^n / dx_1 ... dx_n
    XPoly mixed_derivative() const;
    // Terms whose coefficient has beta power exactly p, returned as beta^p.
    XPoly beta_slice(int p) const;
    // Exact through beta^max_power.
    int max_power() const;
};

// Compares every coefficient through beta^max_power, or as far as both sides are known.
// Absent keys count as zero. On failure *mismatch describes the first differing term.
bool xpoly_equal(const XPoly& a, const XPoly& b, int max_power, std::string* mismatch = nullptr);

// W_n(x) = prod nabla(x_i) tau at t = 0 (or log tau when connected).
XPoly multicurrent_W(const TauSeries& tau, int n, int x_degree, bool connected = false);
// (prod x_i) W_n
XPoly current_J(const XPoly& w);

// Second cumulant W_2 - W_1(x_1) W_1(x_2), kept to total x-degree x_degree.
XPoly cumulant_W2(const XPoly& w2, const XPoly& w1, int x_degree);

// F_n = sum gamma^|mu| beta^{d - l(nu)} H^d(mu, nu) |aut mu| m_mu(x) p_nu(s) over l(mu) = n,
// |mu| <= w_max, d <= d_max; connected uses the log tau numbers. The beta offset follows conv.
XPoly build_F_n(const WeightFamily& f, int n, int w_max, int d_max, SConvention conv, bool connected = false);

struct WFReport {
    int n = 0;
    int x_degree = 0;
    bool connected = false;
    bool ok = true;
    int terms_checked = 0;
    std::vector<std::string> mismatches;
};

// W_n = d^n F_n / dx_1..dx_n (and the connected and per-genus versions when connected).
WFReport check_W_equals_dF(const WeightFamily& f, int n, int x_degree, int d_max, bool connected = false);

}  // namespace hwtau
