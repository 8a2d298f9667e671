#include "hwtau/weights.hpp"

#include "hwtau/errors.hpp"
#include "hwtau/symfun.hpp"

#include <algorithm>
#include <numeric>

namespace hwtau {

namespace {

std::string list_str(const std::vector<Rational>& c) {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].str();
    return s + ")";
}

}  // namespace

WeightFamily WeightFamily::finite(std::vector<Rational> c, std::string label) {
    WeightFamily f;
    f.kind = FamilyKind::FiniteC;
    f.c = std::move(c);
    f.label = label.empty() ? "finite" + list_str(f.c) : std::move(label);
    return f;
}

WeightFamily WeightFamily::dual(std::vector<Rational> c, std::string label) {
    WeightFamily f;
    f.kind = FamilyKind::DualFiniteC;
    f.c = std::move(c);
    f.label = label.empty() ? "dual" + list_str(f.c) : std::move(label);
    return f;
}

WeightFamily WeightFamily::exponential() {
    WeightFamily f;
    f.kind = FamilyKind::Exponential;
    f.label = "exp";
    return f;
}

WeightFamily WeightFamily::quantum(const Rational& q) {
    if (q.sign() <= 0 || q >= Rational(1)) throw ConfigError("quantum family needs 0 < q < 1");
    WeightFamily f;
    f.kind = FamilyKind::Quantum;
    f.q = q;
    f.label = "quantum(" + q.str() + ")";
    return f;
}

int WeightFamily::degree() const {
    if (kind != FamilyKind::FiniteC) throw ConfigError("family " + label + " is not polynomial");
    return static_cast<int>(c.size());
}

std::string WeightFamily::describe() const {
    switch (kind) {
    case FamilyKind::FiniteC: return "G(z) = prod (1 + c_i z), c = " + list_str(c);
    case FamilyKind::DualFiniteC: return "G(z) = prod 1/(1 - c_i z), c = " + list_str(c);
    case FamilyKind::Exponential: return "G(z) = exp(z)";
    case FamilyKind::Quantum: return "G(z) = prod_{i>=1} (1 + q^i z), q = " + q.str();
    }
    return label;
}

Rational g_coeff(const WeightFamily& f, int i) {
    if (i < 0) return Rational(0);
    switch (f.kind) {
    case FamilyKind::FiniteC: return elementary(i, f.c);
    case FamilyKind::DualFiniteC: return complete(i, f.c);
    case FamilyKind::Exponential: return Rational(Integer(1), factorial(static_cast<unsigned>(i)));
    case FamilyKind::Quantum: {
        Rational den(1);
        for (int j = 1; j <= i; ++j) den *= Rational(1) - pow(f.q, j);
        return pow(f.q, static_cast<long>(i) * (i + 1) / 2) / den;
    }
    }
    return Rational(0);
}

BetaSeries r_factor(const WeightFamily& f, int j, int d_max) {
    BetaSeries one = BetaSeries::constant(Rational(1), d_max);
    if (j == 0) return one;
    switch (f.kind) {
    case FamilyKind::FiniteC: {
        BetaSeries r = one;
        for (const auto& ci : f.c) r *= one + BetaSeries::monomial(ci * Rational(j), 1, d_max);
        return r;
    }
    case FamilyKind::DualFiniteC: {
        BetaSeries r = one;
        for (const auto& ci : f.c) r *= one - BetaSeries::monomial(ci * Rational(j), 1, d_max);
        return inv(r);
    }
    case FamilyKind::Exponential:
    case FamilyKind::Quantum: {
        BetaSeries r(d_max);
        for (int i = 0; i <= d_max; ++i) r.set(i, g_coeff(f, i) * pow(Rational(j), i));
        return r;
    }
    }
    return one;
}

ContentProduct content_product(const WeightFamily& f, const Partition& lambda, int shift, int d_max) {
    BetaSeries v = BetaSeries::constant(Rational(1), d_max);
    for (int c : contents(lambda)) v *= r_factor(f, c + shift, d_max);
    return ContentProduct{lambda, shift, v};
}

bool exactly_evaluable(const WeightFamily& f, const EvalPoint& pt) {
    if (f.kind == FamilyKind::Quantum) return false;
    if (f.kind == FamilyKind::Exponential) return pt.exp_beta.has_value();
    return true;
}

Rational G_at(const WeightFamily& f, int j, const EvalPoint& pt) {
    const Rational x = pt.beta * Rational(j);
    switch (f.kind) {
    case FamilyKind::FiniteC: {
        Rational r(1);
        for (const auto& ci : f.c) r *= Rational(1) + ci * x;
        return r;
    }
    case FamilyKind::DualFiniteC: {
        Rational r(1);
        for (const auto& ci : f.c) r *= Rational(1) - ci * x;
        if (r.is_zero())
            throw SingularParameterError("dual weight G(" + std::to_string(j) + " beta) has a pole at beta = " +
                                         pt.beta.str());
        return Rational(1) / r;
    }
    case FamilyKind::Exponential:
        if (!pt.exp_beta)
            throw ConfigError("exponential family at rational beta needs an exact value for e^beta (exp_beta)");
        if (pt.exp_beta->sign() <= 0) throw ConfigError("exp_beta must be positive");
        return pow(*pt.exp_beta, j);
    case FamilyKind::Quantum:
        throw ConfigError("quantum family has no exact rational values G(j beta); use beta series instead");
    }
    return Rational(1);
}

Rational rho(const WeightFamily& f, int j, const EvalPoint& pt) {
    if (j == 0) return Rational(1);
    if (pt.gamma.is_zero()) throw SingularParameterError("gamma = 0 makes rho singular");
    Rational r = pow(pt.gamma, j);
    if (j > 0) {
        for (int i = 1; i <= j; ++i) r *= G_at(f, i, pt);
        return r;
    }
    for (int i = 0; i < -j; ++i) {
        Rational g = G_at(f, -i, pt);
        if (g.is_zero())
            throw SingularParameterError("rho_" + std::to_string(j) + " divides by G(-" + std::to_string(i) +
                                         " beta) = 0 (i = " + std::to_string(i) + ")");
        r /= g;
    }
    return r;
}

BetaSeries rho_series(const WeightFamily& f, int j, int d_max) {
    BetaSeries r = BetaSeries::constant(Rational(1), d_max);
    if (j > 0) {
        for (int i = 1; i <= j; ++i) r *= r_factor(f, i, d_max);
    } else {
        for (int i = 0; i < -j; ++i) r *= inv(r_factor(f, -i, d_max));
    }
    return r;
}

std::vector<Rational> log_A_coeffs(const WeightFamily& f, int k_max) {
    std::vector<Rational> a(static_cast<size_t>(std::max(k_max, 0)) + 1, Rational(0));
    for (int k = 1; k <= k_max; ++k) {
        switch (f.kind) {
        case FamilyKind::FiniteC: a[k] = power_sum(k, f.c) / Rational(k); break;
        case FamilyKind::DualFiniteC: {
            // log prod (1 - c z)^{-1} = sum_k p_k z^k / k
            Rational v = power_sum(k, f.c) / Rational(k);
            a[k] = k % 2 == 1 ? v : -v;
            break;
        }
        case FamilyKind::Exponential: a[k] = k == 1 ? Rational(1) : Rational(0); break;
        case FamilyKind::Quantum: {
            Rational qk = pow(f.q, k);
            a[k] = qk / (Rational(k) * (Rational(1) - qk));
            break;
        }
        }
    }
    return a;
}

std::vector<Rational> pk_poly(int k) {
    if (k < 0) throw DomainError("pk_poly needs k >= 0");
    // Newton form on x = 0..k+1 using forward differences, then expand binomials.
    const int n = k + 2;
    std::vector<Rational> vals(static_cast<size_t>(n), Rational(0));
    for (int x = 1; x < n; ++x) vals[x] = vals[x - 1] + pow(Rational(x), k);
    std::vector<Rational> coeffs(static_cast<size_t>(n), Rational(0));
    std::vector<Rational> diff = vals;
    // binom holds the monomial coefficients of C(x, m).
    std::vector<Rational> binom{Rational(1)};
    for (int m = 0; m < n; ++m) {
        for (size_t i = 0; i < binom.size(); ++i) coeffs[i] += diff[0] * binom[i];
        for (int i = 0; i + 1 < static_cast<int>(diff.size()); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
        // C(x, m+1) = C(x, m) (x - m) / (m + 1)
        std::vector<Rational> next(binom.size() + 1, Rational(0));
        for (size_t i = 0; i < binom.size(); ++i) {
            next[i + 1] += binom[i];
            next[i] -= binom[i] * Rational(m);
        }
        for (auto& v : next) v /= Rational(m + 1);
        binom = std::move(next);
    }
    return coeffs;
}

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational r(0);
    for (size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
    return r;
}

namespace {

// Quasi-monomial sum over i_1 < ... < i_k of prod q^{a_j i_j}
// = prod_m 1/(q^{-S_m} - 1) with suffix sums S_m.
Rational quantum_monomial(const Rational& q, const std::vector<int>& a) {
    Rational r(1);
    int suffix = 0;
    for (size_t m = a.size(); m-- > 0;) {
        suffix += a[m];
        r /= pow(q, -suffix) - Rational(1);
    }
    return r;
}

}  // namespace

Rational profile_weight(const WeightFamily& f, const Partition& lambda) {
    switch (f.kind) {
    case FamilyKind::FiniteC: return eval_basis(Basis::m, lambda, f.c);
    case FamilyKind::DualFiniteC: return eval_basis(Basis::f, lambda, f.c);
    case FamilyKind::Exponential: {
        // m_lambda of n copies of 1/n tends to 1/k! on lambda = (1^k), zero otherwise.
        if (lambda.weight() != lambda.length()) return Rational(0);
        return Rational(Integer(1), factorial(static_cast<unsigned>(lambda.length())));
    }
    case FamilyKind::Quantum: {
        std::vector<int> a = lambda.parts();
        std::sort(a.begin(), a.end());
        Rational total(0);
        // Sum over all k! orderings, matching the symmetrization over S_k.
        std::vector<int> perm(a.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> ordered;
            for (int i : perm) ordered.push_back(a[i]);
            total += quantum_monomial(f.q, ordered);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return total / Rational(aut_order(lambda));
    }
    }
    return Rational(0);
}

Rational path_weight(const WeightFamily& f, const Partition& lambda) {
    Rational r(1);
    for (int p : lambda.parts()) r *= g_coeff(f, p);
    return r;
}

}  // namespace hwtau
