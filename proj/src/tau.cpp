#include "hwtau/tau.hpp"

#include "hwtau/errors.hpp"
#include "hwtau/symfun.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <tuple>

namespace hwtau {

BetaLaurent with_convention(const BetaSeries& c, const ExpVec& s, SConvention conv) {
    const int off = conv == SConvention::beta_rescaled ? -degree(s) : 0;
    return BetaLaurent{off, c};
}

BetaLaurent TauSeries::coeff(const ExpVec& t, const ExpVec& s, int grade) const {
    return with_convention(body.coeff(t, s, grade), s, convention);
}

TauSeries build_tau(const WeightFamily& family, int w_max, int d_max, SConvention conv) {
    if (w_max < 0 || d_max < 0) throw ConfigError("build_tau needs w_max, d_max >= 0");
    if (w_max > char_table_cap())
        throw ResourceError("w_max " + std::to_string(w_max) + " exceeds character cap " +
                            std::to_string(char_table_cap()));
    TauSeries tau;
    tau.family = family;
    tau.w_max = w_max;
    tau.d_max = d_max;
    tau.convention = conv;
    tau.body = GradedPoly(w_max, d_max);
    for (int n = 0; n <= w_max; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            const BetaSeries r = content_product(family, lambda, 0, d_max).value;
            const auto st = schur_poly(lambda, Alphabet::T, w_max, d_max);
            const auto ss = schur_poly(lambda, Alphabet::S, w_max, d_max);
            for (const auto& [mt, ct] : st.terms())
                for (const auto& [ms, cs] : ss.terms())
                    tau.body.add_term(make_monomial(mt.t, ms.s, n), r * ct[0] * cs[0]);
        }
    }
    return tau;
}

GradedPoly log_tau(const TauSeries& tau) { return log(tau.body); }

Rational EvaluatedTau::coeff(const ExpVec& t) const {
    if (weight(t) > w_max) throw OutOfWindowError("t-weight " + std::to_string(weight(t)) + " beyond w_max");
    auto it = coeffs.find(trimmed(t));
    return it == coeffs.end() ? Rational(0) : it->second;
}

EvaluatedTau evaluate_tau(const WeightFamily& family, const EvalPoint& pt, const std::vector<Rational>& s,
                          int w_max) {
    if (pt.beta.is_zero()) throw DomainError("tau(t, s/beta) needs beta != 0");
    EvaluatedTau tau;
    tau.family = family;
    tau.point = pt;
    tau.s = s;
    tau.w_max = w_max;
    auto x_of = [&](int k) { return k <= static_cast<int>(s.size()) ? s[k - 1] / pt.beta : Rational(0); };
    for (int n = 0; n <= w_max; ++n) {
        const auto& parts = enumerate_partitions(n);
        // p_nu(s / beta) for every class nu
        std::vector<Rational> p_s;
        for (const auto& nu : parts) {
            Rational v(1);
            for (int k : nu.parts()) v *= Rational(k) * x_of(k);
            p_s.push_back(v);
        }
        for (const auto& lambda : parts) {
            Rational r = pow(pt.gamma, n);
            for (int c : contents(lambda)) r *= G_at(family, c, pt);
            if (r.is_zero()) continue;
            Rational slam(n == 0 ? 1 : 0);
            for (size_t j = 0; j < parts.size() && n > 0; ++j)
                slam += Rational(character(lambda, parts[j])) / Rational(z_order(parts[j])) * p_s[j];
            if (slam.is_zero()) continue;
            for (const auto& mu : parts) {
                const long long ch = n == 0 ? 1 : character(lambda, mu);
                if (ch == 0) continue;
                const Rational v = r * slam * Rational(ch) / Rational(z_order(mu)) * power_sum_factor(mu);
                auto key = trimmed(mu.exponent_vector());
                auto [it, fresh] = tau.coeffs.emplace(key, v);
                if (!fresh) it->second += v;
            }
        }
    }
    for (auto it = tau.coeffs.begin(); it != tau.coeffs.end();) {
        if (it->second.is_zero())
            it = tau.coeffs.erase(it);
        else
            ++it;
    }
    return tau;
}

BakerPair baker(const EvaluatedTau& tau, int depth) {
    if (depth > tau.w_max)
        throw OutOfWindowError("Baker window z^-" + std::to_string(depth) + " needs w_max >= " +
                               std::to_string(depth));
    const Rational tau0 = tau.coeff({});
    if (tau0.is_zero()) throw SingularParameterError("tau(0) vanishes");
    BakerPair out{LaurentWindow(-depth, 0), LaurentWindow(-depth, 0)};
    for (const auto& [t, c] : tau.coeffs) {
        const int w = weight(t);
        if (w > depth) continue;
        Rational plus = c / tau0;
        for (size_t i = 0; i < t.size(); ++i)
            plus *= pow(Rational(Integer(1), Integer(static_cast<long>(i + 1))), t[i]);
        // t_i -> -z^{-i}/i flips the sign by (-1)^{degree}
        const Rational minus = degree(t) % 2 == 0 ? plus : -plus;
        out.plus.add_to(-w, plus);
        out.minus.add_to(-w, minus);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hirota bilinear residual

namespace {

// (z-power, t, dt, s, grade)
using HKey = std::tuple<int, ExpVec, ExpVec, ExpVec, int>;
using HMap = std::map<HKey, BetaSeries>;

void hadd(HMap& m, HKey k, const BetaSeries& v) {
    auto it = m.find(k);
    if (it == m.end())
        m.emplace(std::move(k), v);
    else
        it->second += v;
}

// Splits of a over parts of sizes (x, y, w), calling f(x, y, w, multinomial).
void splits3(const ExpVec& a, bool with_dt, const std::function<void(const ExpVec&, const ExpVec&, const ExpVec&,
                                                                     const Rational&)>& f) {
    const size_t n = a.size();
    ExpVec x(n), y(n), w(n);
    std::function<void(size_t, Rational)> rec = [&](size_t i, Rational mult) {
        if (i == n) {
            f(trimmed(x), trimmed(y), trimmed(w), mult);
            return;
        }
        for (int xi = 0; xi <= a[i]; ++xi) {
            const int ymax = with_dt ? a[i] - xi : 0;
            for (int yi = 0; yi <= ymax; ++yi) {
                const int wi = a[i] - xi - yi;
                x[i] = xi;
                y[i] = yi;
                w[i] = wi;
                Rational m = mult * Rational(factorial(static_cast<unsigned>(a[i]))) /
                             Rational(factorial(static_cast<unsigned>(xi)) * factorial(static_cast<unsigned>(yi)) *
                                      factorial(static_cast<unsigned>(wi)));
                rec(i + 1, m);
            }
        }
    };
    rec(0, Rational(1));
}

// All exponent vectors of weight exactly n.
std::vector<ExpVec> vectors_of_weight(int n) {
    std::vector<ExpVec> out;
    for (const auto& p : enumerate_partitions(n)) out.push_back(trimmed(p.exponent_vector()));
    return out;
}

}  // namespace

std::string HirotaResidual::first_term() const {
    if (terms.empty()) return "";
    const auto& [k, v] = *terms.begin();
    auto vec = [](const ExpVec& e) {
        std::string s = "[";
        for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
        return s + "]";
    };
    return "t=" + vec(k.t) + " dt=" + vec(k.dt) + " s=" + vec(k.s) + " grade=" + std::to_string(k.grade) +
           " coeff=" + v.str();
}

HirotaResidual hirota_residual(const GradedPoly& body, int P) {
    if (P < 0) throw ConfigError("probe degree must be >= 0");
    if (body.w_max() < 2 * P)
        throw OutOfWindowError("Hirota probe degree " + std::to_string(P) + " needs w_max >= " +
                               std::to_string(2 * P));
    const int d_max = body.d_max();
    HMap A, B;
    for (const auto& [m, c] : body.terms()) {
        if (weight(m.t) > P + 1) continue;
        // tau(t + dt + [z^{-1}]): t_i^{x} dt_i^{y} (z^{-i}/i)^{w}
        splits3(m.t, true, [&](const ExpVec& x, const ExpVec& y, const ExpVec& w, const Rational& mult) {
            if (weight(x) + weight(y) > P) return;
            Rational f = mult;
            for (size_t i = 0; i < w.size(); ++i) f *= pow(Rational(Integer(1), Integer(static_cast<long>(i + 1))), w[i]);
            hadd(A, HKey{-weight(w), x, y, m.s, m.grade}, c * f);
        });
        // tau(t - [z^{-1}])
        splits3(m.t, false, [&](const ExpVec& x, const ExpVec&, const ExpVec& w, const Rational& mult) {
            if (weight(x) > P) return;
            Rational f = mult;
            for (size_t i = 0; i < w.size(); ++i) f *= pow(Rational(Integer(-1), Integer(static_cast<long>(i + 1))), w[i]);
            hadd(B, HKey{-weight(w), x, ExpVec{}, m.s, m.grade}, c * f);
        });
    }
    // e^{-xi(dt, z)} = sum_n z^n E_n(dt)
    std::vector<std::vector<std::pair<ExpVec, Rational>>> E(static_cast<size_t>(P) + 1);
    for (int n = 0; n <= P; ++n)
        for (const auto& e : vectors_of_weight(n)) {
            Rational v(1);
            for (int ei : e) v *= Rational(ei % 2 == 0 ? 1 : -1) / Rational(factorial(static_cast<unsigned>(ei)));
            E[n].emplace_back(e, v);
        }
    HirotaResidual res;
    res.probe_degree = P;
    std::map<HirotaKey, BetaSeries> acc;
    for (const auto& [ka, va] : A) {
        const auto& [za, ta, dta, sa, ga] = ka;
        for (const auto& [kb, vb] : B) {
            const auto& [zb, tb, dtb, sb, gb] = kb;
            const int n = -1 - za - zb;
            if (n < 0 || n > P) continue;
            const int wt = weight(ta) + weight(dta) + weight(tb) + n;
            if (wt > P) continue;
            const BetaSeries ab = va * vb;
            for (const auto& [e, ev] : E[n]) {
                HirotaKey key{add(ta, tb), add(dta, e), add(sa, sb), ga + gb};
                auto it = acc.find(key);
                if (it == acc.end())
                    acc.emplace(key, ab * ev);
                else
                    it->second += ab * ev;
            }
        }
    }
    for (auto& [k, v] : acc)
        if (!v.is_zero()) res.terms.emplace(k, v);
    (void)d_max;
    return res;
}

HirotaResidual hirota_residual(const TauSeries& tau, int probe_degree) {
    return hirota_residual(tau.body, probe_degree);
}

// ---------------------------------------------------------------------------
// Multicurrent correlators

void XPoly::add(const XKey& k, const BetaLaurent& v) {
    auto it = terms.find(k);
    if (it == terms.end())
        terms.emplace(k, v);
    else
        it->second = it->second + v;
}

XPoly XPoly::mixed_derivative() const {
    XPoly out;
    out.n = n;
    for (const auto& [k, v] : terms) {
        if (std::any_of(k.x.begin(), k.x.end(), [](int e) { return e == 0; })) continue;
        XKey nk = k;
        Rational f(1);
        for (auto& e : nk.x) {
            f *= Rational(e);
            --e;
        }
        out.add(nk, BetaLaurent{v.offset, v.body * f});
    }
    return out;
}

XPoly XPoly::beta_slice(int p) const {
    XPoly out;
    out.n = n;
    for (const auto& [k, v] : terms) {
        if (p > v.max_power())
            throw OutOfWindowError("beta^" + std::to_string(p) + " beyond known order " +
                                   std::to_string(v.max_power()));
        const Rational c = p < v.offset ? Rational(0) : v.at(p);
        if (!c.is_zero()) out.add(k, BetaLaurent{p, BetaSeries::constant(c, 0)});
    }
    return out;
}

int XPoly::max_power() const {
    int m = INT_MAX;
    for (const auto& [k, v] : terms) m = std::min(m, v.max_power());
    return m;
}

bool xpoly_equal(const XPoly& a, const XPoly& b, int max_power, std::string* mismatch) {
    std::map<XKey, std::pair<const BetaLaurent*, const BetaLaurent*>> keys;
    for (const auto& [k, v] : a.terms) keys[k].first = &v;
    for (const auto& [k, v] : b.terms) keys[k].second = &v;
    auto at = [](const BetaLaurent* v, int p) { return !v || p < v->offset ? Rational(0) : v->at(p); };
    for (const auto& [k, pr] : keys) {
        int lo = INT_MAX;
        int hi = max_power;
        for (const BetaLaurent* v : {pr.first, pr.second})
            if (v) {
                lo = std::min(lo, v->offset);
                hi = std::min(hi, v->max_power());
            }
        for (int p = lo; p <= hi; ++p) {
            const Rational x = at(pr.first, p), y = at(pr.second, p);
            if (x != y) {
                if (mismatch) {
                    std::string xs;
                    for (size_t i = 0; i < k.x.size(); ++i) xs += (i ? "," : "") + std::to_string(k.x[i]);
                    std::string ss;
                    for (size_t i = 0; i < k.s.size(); ++i) ss += (i ? "," : "") + std::to_string(k.s[i]);
                    *mismatch = "x=[" + xs + "] s=[" + ss + "] grade=" + std::to_string(k.grade) + " beta^" +
                                std::to_string(p) + ": " + x.str() + " vs " + y.str();
                }
                return false;
            }
        }
    }
    return true;
}

namespace {

// All orderings (a_1..a_n) of the multiset with multiplicity vector e.
std::vector<std::vector<int>> arrangements(const ExpVec& e) {
    std::vector<int> items;
    for (size_t i = 0; i < e.size(); ++i)
        for (int j = 0; j < e[i]; ++j) items.push_back(static_cast<int>(i) + 1);
    std::vector<std::vector<int>> out;
    std::sort(items.begin(), items.end());
    do out.push_back(items);
    while (std::next_permutation(items.begin(), items.end()));
    return out;
}

}  // namespace

XPoly multicurrent_W(const TauSeries& tau, int n, int x_degree, bool connected) {
    if (n < 1 || n > 4) throw ConfigError("multicurrent W_n supports 1 <= n <= 4");
    if (x_degree + n > tau.w_max)
        throw OutOfWindowError("W_" + std::to_string(n) + " to x-degree " + std::to_string(x_degree) +
                               " needs w_max >= " + std::to_string(x_degree + n));
    const GradedPoly src = connected ? log_tau(tau) : tau.body;
    XPoly out;
    out.n = n;
    for (const auto& [m, c] : src.terms()) {
        if (degree(m.t) != n || weight(m.t) > x_degree + n) continue;
        Rational mult(1);
        for (int e : m.t) mult *= Rational(factorial(static_cast<unsigned>(e)));
        for (auto a : arrangements(m.t)) {
            for (auto& ai : a) --ai;
            out.add(XKey{a, m.s, m.grade}, with_convention(c * mult, m.s, tau.convention));
        }
    }
    return out;
}

XPoly current_J(const XPoly& w) {
    XPoly out;
    out.n = w.n;
    for (const auto& [k, v] : w.terms) {
        XKey nk = k;
        for (auto& e : nk.x) ++e;
        out.add(nk, v);
    }
    return out;
}

XPoly cumulant_W2(const XPoly& w2, const XPoly& w1, int x_degree) {
    if (w2.n != 2 || w1.n != 1) throw ConfigError("cumulant_W2 needs W_2 and W_1");
    XPoly out = w2;
    for (const auto& [k1, v1] : w1.terms)
        for (const auto& [k2, v2] : w1.terms) {
            if (k1.x[0] + k2.x[0] > x_degree) continue;
            XKey k{{k1.x[0], k2.x[0]}, add(k1.s, k2.s), k1.grade + k2.grade};
            BetaLaurent p = v1 * v2;
            out.add(k, BetaLaurent{p.offset, -p.body});
        }
    return out;
}

}  // namespace hwtau
