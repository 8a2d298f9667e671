#include "hwtau/adapted_basis.hpp"

#include "hwtau/errors.hpp"
#include "hwtau/symfun.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace hwtau {

namespace {

std::string idx(int k) { return std::to_string(k); }

Rational s_at(const std::vector<Rational>& s, int k) {
    if (k < 1 || k > static_cast<int>(s.size())) return Rational(0);
    return s[static_cast<size_t>(k - 1)];
}

struct Term {
    int index;
    Rational coeff;
};

// sum coeff * elem(index). A missing element leaves its exponents (top and below)
// undetermined, so valid_lo is raised above its top.
LaurentWindow expand(int lo, const std::vector<Term>& terms,
                     const std::function<std::optional<LaurentWindow>(int)>& elem,
                     const std::function<int(int)>& top, int& valid_lo) {
    LaurentWindow acc(lo, lo - 1);
    for (const auto& t : terms) {
        auto e = elem(t.index);
        // a zero coefficient does not excuse a missing element: it may be a 0 * pole
        if (!e) valid_lo = std::max(valid_lo, top(t.index) + 1);
        else if (!t.coeff.is_zero()) acc += *e * t.coeff;
    }
    return acc;
}

LaurentWindow zero_like(const LaurentWindow& f) { return LaurentWindow(f.lo(), f.lo() - 1); }

// 1/rho_j without dividing when j < 0: rho_{-m}^{-1} = gamma^m prod_{i=0}^{m-1} G(-i beta), possibly zero.
Rational rho_inverse(const WeightFamily& f, int j, const EvalPoint& pt) {
    if (j < 0) {
        Rational r(1);
        for (int i = 0; i < -j; ++i) r *= pt.gamma * G_at(f, -i, pt);
        return r;
    }
    const Rational r = rho(f, j, pt);
    if (r.is_zero()) throw SingularParameterError("1/rho_" + std::to_string(j) + " needed but rho_" +
                                                  std::to_string(j) + " = 0");
    return Rational(1) / r;
}

BasisWindow build_impl(const WeightFamily& f, const EvalPoint& pt, const std::vector<Rational>& s, int k_lo,
                       int k_hi, int depth, const std::function<Rational(int)>& rho_fn,
                       const std::function<Rational(int)>& rho_inv_fn) {
    if (k_lo > k_hi) throw ConfigError("basis k-range is empty");
    if (depth < 0) throw ConfigError("basis depth must be >= 0");
    if (k_lo - 1 < -depth)
        throw ConfigError("depth " + idx(depth) + " does not reach the top exponent of w_" + idx(k_lo));
    BasisWindow b;
    b.family = f;
    b.point = pt;
    b.s = s;
    b.k_lo = k_lo;
    b.k_hi = k_hi;
    b.depth = depth;
    const int n_max = k_hi - 1 + depth + 16;
    b.h_plus = h_poly_list(n_max, 1, pt.beta, s);
    b.h_minus = h_poly_list(n_max, -1, pt.beta, s);

    std::map<int, Rational> rho_cache, rho_inv_cache;
    auto rho_of = [&](int j) -> const Rational& {
        auto it = rho_cache.find(j);
        if (it != rho_cache.end()) return it->second;
        return rho_cache.emplace(j, rho_fn(j)).first->second;
    };
    auto rho_inv_of = [&](int j) -> const Rational& {
        auto it = rho_inv_cache.find(j);
        if (it != rho_inv_cache.end()) return it->second;
        return rho_inv_cache.emplace(j, rho_inv_fn(j)).first->second;
    };
    for (int k = k_lo; k <= k_hi; ++k) {
        LaurentWindow wk(-depth, k - 1);
        LaurentWindow wsk(-depth, k - 1);
        for (int j = k - 1; j >= -depth; --j) {
            const Rational& hp = b.h_plus[static_cast<size_t>(k - j - 1)];
            const Rational& hm = b.h_minus[static_cast<size_t>(k - j - 1)];
            if (!hp.is_zero()) {
                try {
                    wk.set(j, hp * rho_of(-j - 1));
                } catch (const SingularParameterError& e) {
                    throw SingularParameterError("w_" + idx(k) + " needs rho_" + idx(-j - 1) + ": " + e.what());
                }
            }
            if (!hm.is_zero()) {
                try {
                    wsk.set(j, hm * rho_inv_of(j));
                } catch (const SingularParameterError& e) {
                    throw SingularParameterError("w*_" + idx(k) + ": " + e.what());
                }
            }
        }
        b.w.emplace(k, std::move(wk));
        b.w_dual.emplace(k, std::move(wsk));
    }
    return b;
}

}  // namespace

int BasisWindow::support() const {
    for (int k = static_cast<int>(s.size()); k >= 1; --k)
        if (!s[static_cast<size_t>(k - 1)].is_zero()) return k;
    return 0;
}

const LaurentWindow& BasisWindow::wk(int k) const {
    auto it = w.find(k);
    if (it == w.end()) throw OutOfWindowError("w_" + idx(k) + " outside k-range");
    return it->second;
}

const LaurentWindow& BasisWindow::wk_dual(int k) const {
    auto it = w_dual.find(k);
    if (it == w_dual.end()) throw OutOfWindowError("w*_" + idx(k) + " outside k-range");
    return it->second;
}

LaurentWindow BasisWindow::psi_plus(int k) const { return wk(1 - k) * point.gamma; }
LaurentWindow BasisWindow::psi_minus(int k) const { return wk_dual(1 - k); }

Rational BasisWindow::h(int sign, int n) const {
    if (n < 0) return Rational(0);
    const auto& v = sign > 0 ? h_plus : h_minus;
    if (n < static_cast<int>(v.size())) return v[static_cast<size_t>(n)];
    return h_poly(n, sign, point.beta, s);
}

BasisWindow build_basis(const WeightFamily& f, const EvalPoint& pt, const std::vector<Rational>& s, int k_lo,
                        int k_hi, int depth) {
    return build_impl(
        f, pt, s, k_lo, k_hi, depth, [&](int j) { return rho(f, j, pt); },
        [&](int j) { return rho_inverse(f, j, pt); });
}

BasisWindow build_basis_corrupted(const WeightFamily& f, const EvalPoint& pt, const std::vector<Rational>& s,
                                  int k_lo, int k_hi, int depth, int j, const Rational& factor) {
    return build_impl(
        f, pt, s, k_lo, k_hi, depth,
        [&](int i) {
            const Rational r = rho(f, i, pt);
            return i == j ? r * factor : r;
        },
        [&](int i) {
            const Rational r = rho_inverse(f, i, pt);
            return i == j ? r / factor : r;
        });
}

LaurentWindow euler_op(const LaurentWindow& f) {
    return f.map_monomials(0, [](int i) { return Rational(i); });
}

LaurentWindow ladder_R(const BasisWindow& b, const LaurentWindow& f) {
    return f.map_monomials(-1, [&](int i) { return b.point.gamma * b.G(-i); });
}

LaurentWindow ladder_R_dual(const BasisWindow& b, const LaurentWindow& f) {
    return f.map_monomials(-1, [&](int i) { return b.point.gamma * b.G(i); });
}

namespace {

// z^i -> z^{i+1} / (gamma G(sign (i+1) beta)). Every exponent of the window must avoid
// zeros of G, including exponents whose coefficient happens to vanish (0 * pole).
LaurentWindow inverse_ladder(const BasisWindow& b, const LaurentWindow& f, int sign, const char* name) {
    std::map<int, Rational> inv;
    for (int i = f.lo(); i <= f.hi(); ++i) {
        const Rational g = b.point.gamma * b.G(sign * (i + 1));
        if (g.is_zero())
            throw SingularParameterError(std::string(name) + " is singular at G(" + idx(sign * (i + 1)) +
                                         " beta) = 0");
        inv.emplace(i, Rational(1) / g);
    }
    return f.map_monomials(1, [&](int i) { return inv.at(i); });
}

}  // namespace

LaurentWindow raise_a(const BasisWindow& b, const LaurentWindow& f) { return inverse_ladder(b, f, -1, "a = 1/R"); }

LaurentWindow raise_a_dual(const BasisWindow& b, const LaurentWindow& f) {
    return inverse_ladder(b, f, 1, "a* = 1/R*");
}

LaurentWindow apply_S(const BasisWindow& b, const std::function<LaurentWindow(const LaurentWindow&)>& op,
                      const LaurentWindow& f) {
    LaurentWindow acc = zero_like(f);
    LaurentWindow power = f;
    for (int k = 1; k <= b.support(); ++k) {
        power = op(power);
        const Rational c = Rational(k) * s_at(b.s, k);
        if (!c.is_zero()) acc += power * c;
    }
    return acc;
}

CheckReport pairing_check(const BasisWindow& b) {
    CheckReport rep;
    rep.suite = "pairing";
    std::vector<std::string> untestable;
    for (int j = b.k_lo; j <= b.k_hi; ++j)
        for (int l = b.k_lo; l <= b.k_hi; ++l) {
            const LaurentWindow prod = b.wk(j) * b.wk_dual(l);
            if (prod.lo() > -1) {
                untestable.push_back("(" + idx(j) + "," + idx(l) + ")");
                continue;
            }
            check_equal(rep, "<w_" + idx(j) + ", w*_" + idx(l) + ">", prod.residue(), Rational(j + l == 1 ? 1 : 0),
                        prod.lo(), prod.hi());
        }
    if (!untestable.empty()) {
        std::string msg = "depth " + idx(b.depth) + " leaves residues undetermined for pairs";
        for (const auto& u : untestable) msg += " " + u;
        throw OutOfWindowError(msg);
    }
    return rep;
}

Rational Q_plus(const BasisWindow& b, int i, int j) {
    Rational acc(0);
    for (int k = i - 1; k <= j; ++k) {
        const Rational hh = b.h(1, k - i + 1) * b.h(-1, j - k);
        if (!hh.is_zero()) acc += b.G(k) * hh;
    }
    return acc;
}

Rational Q_minus(const BasisWindow& b, int i, int j) {
    Rational acc(0);
    for (int k = i - 1; k <= j; ++k) {
        const Rational hh = b.h(1, j - k) * b.h(-1, k - i + 1);
        if (!hh.is_zero()) acc += b.G(-k) * hh;
    }
    return acc;
}

Rational g_entry(const BasisWindow& b, int i, int j) {
    if (i < j) return Rational(0);
    const Rational hh = b.h(1, i - j);
    if (hh.is_zero()) return hh;
    return rho(b.family, i, b.point) * hh;
}

Rational g_inv_entry(const BasisWindow& b, int i, int j) {
    if (i < j) return Rational(0);
    const Rational hh = b.h(-1, i - j);
    if (hh.is_zero()) return hh;
    return hh * rho_inverse(b.family, j, b.point);
}

Rational Q_tilde_plus(const BasisWindow& b, int k, int j) {
    Rational acc(0);
    for (int i = -k - 1; i <= -j; ++i) acc += g_inv_entry(b, -j, i) * g_entry(b, i + 1, -k);
    return acc;
}

Rational Q_tilde_minus(const BasisWindow& b, int k, int j) {
    Rational acc(0);
    for (int i = j - 2; i <= k - 1; ++i) acc += g_inv_entry(b, k - 1, i) * g_entry(b, i + 1, j - 1);
    return acc;
}

RecursionMatrices recursion_Q(const BasisWindow& b, int band_cutoff) {
    RecursionMatrices out;
    out.report.suite = "recursion_Q";
    const bool finite = b.family.kind == FamilyKind::FiniteC;
    if (finite) {
        out.band = b.support() * b.family.degree();
    } else {
        if (band_cutoff < 0)
            throw ConfigError("Q-recursion for " + b.family.describe() + " needs an explicit band cutoff");
        out.band = band_cutoff;
    }
    const Rational inv_gamma = Rational(1) / b.point.gamma;
    for (int sign : {1, -1}) {
        const std::string tag = sign > 0 ? "Q+" : "Q-";
        auto psi = [&](int k) -> std::optional<LaurentWindow> {
            if (!b.has(1 - k)) return std::nullopt;
            return sign > 0 ? b.psi_plus(k) : b.psi_minus(k);
        };
        for (int i = 1 - b.k_hi; i <= 1 - b.k_lo; ++i) {
            std::vector<Term> terms;
            for (int j = i - 1; j <= i - 1 + out.band; ++j) {
                const Rational q = sign > 0 ? Q_plus(b, i, j) : Q_minus(b, i, j);
                (sign > 0 ? out.q_plus : out.q_minus)[{i, j}] = q;
                terms.push_back({j, q});
            }
            int valid_lo = b.lo();
            if (finite) {
                // the band is exact: the next three entries must vanish
                for (int j = i + out.band; j <= i + out.band + 2; ++j) {
                    const Rational q = sign > 0 ? Q_plus(b, i, j) : Q_minus(b, i, j);
                    check_equal(out.report, tag + " band zero (" + idx(i) + "," + idx(j) + ")", q, Rational(0), i, j);
                }
            } else {
                // entries beyond the cutoff are not assumed zero
                valid_lo = std::max(valid_lo, -(i + out.band) + 1);
            }
            // (1/(gamma x)) Psi_i = (z/gamma) Psi_i
            const LaurentWindow lhs = (*psi(i) * inv_gamma).shifted(1);
            const LaurentWindow rhs = expand(b.lo(), terms, psi, [](int j) { return -j; }, valid_lo);
            compare_windows(out.report, tag + " row " + idx(i), lhs, rhs, valid_lo);
        }
    }
    return out;
}

CheckReport q_tilde_crosscheck(const BasisWindow& b, int plus_lo, int minus_lo, int size) {
    CheckReport rep;
    rep.suite = "Q~ cross-check";
    const Rational inv_gamma = Rational(1) / b.point.gamma;
    for (int k = plus_lo; k < plus_lo + size; ++k)
        for (int j = plus_lo; j < plus_lo + size; ++j)
            check_equal(rep, "Q+(" + idx(k) + "," + idx(j) + ") = Q~-(" + idx(j) + "," + idx(k) + ")/gamma",
                        Q_plus(b, k, j), inv_gamma * Q_tilde_minus(b, j, k), k, j);
    for (int k = minus_lo; k < minus_lo + size; ++k)
        for (int j = minus_lo; j < minus_lo + size; ++j)
            check_equal(rep, "Q-(" + idx(k) + "," + idx(j) + ") = Q~+(" + idx(j) + "," + idx(k) + ")/gamma",
                        Q_minus(b, k, j), inv_gamma * Q_tilde_plus(b, j, k), k, j);
    // g g^{-1} = 1 on the rho indices the two blocks use
    for (int lo : {plus_lo - 2, -(minus_lo + size)}) {
        const int hi = lo + size + 2;
        for (int i = lo; i <= hi; ++i)
            for (int k = lo; k <= i; ++k) {
                Rational acc(0);
                for (int j = k; j <= i; ++j) acc += g_entry(b, i, j) * g_inv_entry(b, j, k);
                check_equal(rep, "(g g^-1)(" + idx(i) + "," + idx(k) + ")", acc, Rational(i == k ? 1 : 0), i, k);
            }
    }
    return rep;
}

Rational P_tilde(const BasisWindow& b, int sign, int i, int j) {
    if (i < j) return Rational(0);
    if (i == j) return Rational(i - 1);
    const Rational v = Rational(i - j) * s_at(b.s, i - j) / b.point.beta;
    return sign > 0 ? -v : v;
}

Rational P_psi(const BasisWindow& b, int sign, int k, int j) {
    return -b.point.beta * P_tilde(b, sign, 1 - k, 1 - j);
}

CheckReport euler_P(const BasisWindow& b) {
    CheckReport rep;
    rep.suite = "euler_P";
    const int L = b.support();
    for (int sign : {1, -1}) {
        const std::string tag = sign > 0 ? "w" : "w*";
        auto elem = [&](int k) -> std::optional<LaurentWindow> {
            if (!b.has(k)) return std::nullopt;
            return sign > 0 ? b.wk(k) : b.wk_dual(k);
        };
        for (int k = b.k_lo; k <= b.k_hi; ++k) {
            std::vector<Term> terms;
            for (int j = k; j >= k - L; --j) terms.push_back({j, P_tilde(b, sign, k, j)});
            int valid_lo = b.lo();
            const LaurentWindow rhs = expand(b.lo(), terms, elem, [](int j) { return j - 1; }, valid_lo);
            compare_windows(rep, "D " + tag + "_" + idx(k), euler_op(*elem(k)), rhs, valid_lo);
        }
        // Psi form, D_x = -D
        const std::string ptag = sign > 0 ? "Psi+" : "Psi-";
        auto psi = [&](int k) -> std::optional<LaurentWindow> {
            if (!b.has(1 - k)) return std::nullopt;
            return sign > 0 ? b.psi_plus(k) : b.psi_minus(k);
        };
        for (int k = 1 - b.k_hi; k <= 1 - b.k_lo; ++k) {
            std::vector<Term> terms;
            for (int j = k; j <= k + L; ++j) terms.push_back({j, P_psi(b, sign, k, j)});
            int valid_lo = b.lo();
            const LaurentWindow rhs = expand(b.lo(), terms, psi, [](int j) { return -j; }, valid_lo);
            const LaurentWindow lhs = euler_op(*psi(k)) * (-b.point.beta);
            compare_windows(rep, "beta D_x " + ptag + "_" + idx(k), lhs, rhs, valid_lo);
        }
    }
    return rep;
}

CheckReport ladder_check(const BasisWindow& b) {
    CheckReport rep;
    rep.suite = "ladder_R";
    for (int k = b.k_lo + 1; k <= b.k_hi; ++k) {
        compare_windows(rep, "R w_" + idx(k), ladder_R(b, b.wk(k)), b.wk(k - 1), b.lo());
        compare_windows(rep, "R* w*_" + idx(k), ladder_R_dual(b, b.wk_dual(k)), b.wk_dual(k - 1), b.lo());
        if (b.has(k - 2)) {
            compare_windows(rep, "R^2 w_" + idx(k), ladder_R(b, ladder_R(b, b.wk(k))), b.wk(k - 2), b.lo());
            compare_windows(rep, "R*^2 w*_" + idx(k), ladder_R_dual(b, ladder_R_dual(b, b.wk_dual(k))),
                            b.wk_dual(k - 2), b.lo());
        }
        // x-form: R_+ Psi+_{1-k} = Psi+_{2-k}, R_- Psi-_{1-k} = Psi-_{2-k}
        compare_windows(rep, "R_+ Psi+_" + idx(1 - k), ladder_R(b, b.psi_plus(1 - k)), b.psi_plus(2 - k), b.lo());
        compare_windows(rep, "R_- Psi-_" + idx(1 - k), ladder_R_dual(b, b.psi_minus(1 - k)), b.psi_minus(2 - k),
                        b.lo());
    }
    return rep;
}

CheckReport kac_schwarz_check(const BasisWindow& b, const std::vector<int>& charges) {
    CheckReport rep;
    rep.suite = "kac_schwarz";
    const Rational inv_beta = Rational(1) / b.point.beta;
    for (int sign : {1, -1}) {
        const bool plain = sign > 0;
        const std::string st = plain ? "" : "*";
        auto R = [&](const LaurentWindow& f) { return plain ? ladder_R(b, f) : ladder_R_dual(b, f); };
        auto A = [&](const LaurentWindow& f) { return plain ? raise_a(b, f) : raise_a_dual(b, f); };
        // b = D + beta^{-1} S(R),  b* = D - beta^{-1} S(R*): the signs forced by b w_k = (k-1) w_k
        auto B = [&](const LaurentWindow& f) {
            return euler_op(f) + apply_S(b, R, f) * (plain ? inv_beta : -inv_beta);
        };
        auto C = [&](const LaurentWindow& f) { return R(B(f)); };
        auto elem = [&](int k) -> const LaurentWindow& { return plain ? b.wk(k) : b.wk_dual(k); };
        for (int k = b.k_lo; k <= b.k_hi; ++k) {
            const LaurentWindow& wk = elem(k);
            const std::string name = "w" + st + "_" + idx(k);
            auto guarded = [&](const std::string& what, const std::function<void()>& run) {
                try {
                    run();
                } catch (const SingularParameterError& e) {
                    rep.skipped.push_back(what + " " + name + ": " + e.what());
                }
            };
            if (b.has(k + 1))
                guarded("a" + st, [&] { compare_windows(rep, "a" + st + " " + name, A(wk), elem(k + 1), b.lo()); });
            compare_windows(rep, "b" + st + " " + name, B(wk), wk * Rational(k - 1), b.lo());
            if (b.has(k - 1)) {
                const LaurentWindow cw = C(wk);
                compare_windows(rep, "c" + st + " " + name, cw, elem(k - 1) * Rational(k - 1), b.lo());
                for (int N : charges)
                    compare_windows(rep, "c" + st + "_" + idx(N) + " " + name, cw - R(wk) * Rational(N),
                                    elem(k - 1) * Rational(k - 1 - N), b.lo());
            }
            guarded("[c" + st + ",a" + st + "]", [&] {
                compare_windows(rep, "[c" + st + ",a" + st + "] " + name, C(A(wk)) - A(C(wk)), wk, b.lo());
            });
        }
    }
    return rep;
}

CurveResiduals quantum_curve_residual(const BasisWindow& b) {
    CurveResiduals out;
    out.report.suite = "quantum_curve";
    const Rational& beta = b.point.beta;
    auto R = [&](const LaurentWindow& f) { return ladder_R(b, f); };
    auto Rs = [&](const LaurentWindow& f) { return ladder_R_dual(b, f); };
    auto record = [&](const std::string& name, const LaurentWindow& res) {
        out.residuals.emplace(name, res);
        compare_windows(out.report, name, res, zero_like(res), b.lo());
    };
    for (int k = b.k_lo; k <= b.k_hi; ++k) {
        const LaurentWindow& w = b.wk(k);
        record("(beta D + S(R)) w_" + idx(k) + " - (k-1) beta w_" + idx(k),
               euler_op(w) * beta + apply_S(b, R, w) - w * (Rational(k - 1) * beta));
        const LaurentWindow& ws = b.wk_dual(k);
        record("(beta D - S(R*)) w*_" + idx(k) + " - (k-1) beta w*_" + idx(k),
               euler_op(ws) * beta - apply_S(b, Rs, ws) - ws * (Rational(k - 1) * beta));
    }
    // x-forms with D_x = -D, R_+ = R, R_- = R*
    for (int k = 1 - b.k_hi; k <= 1 - b.k_lo; ++k) {
        const LaurentWindow pp = b.psi_plus(k);
        const LaurentWindow pm = b.psi_minus(k);
        const std::string ks = idx(k);
        const LaurentWindow res_p = euler_op(pp) * (-beta) - apply_S(b, R, pp) - pp * (Rational(k) * beta);
        const LaurentWindow res_m = euler_op(pm) * (-beta) + apply_S(b, Rs, pm) - pm * (Rational(k) * beta);
        if (k == 0) {
            record("quantum curve [beta D - S(gamma x G(beta D))] Psi+_0", res_p);
            record("quantum curve [beta D + S(gamma x G(-beta D))] Psi-_0", res_m);
        } else {
            record("[beta D - S(R_+)] Psi+_" + ks + " - k beta Psi+_" + ks, res_p);
            record("[beta D + S(R_-)] Psi-_" + ks + " - k beta Psi-_" + ks, res_m);
        }
    }
    return out;
}

std::string Bivariate::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        const auto& [e, c] = *it;
        if (c.is_zero()) continue;
        os << (first ? "" : " + ") << "(" << c.str() << ")";
        if (e.first) os << "*x^" << e.first;
        if (e.second) os << "*y^" << e.second;
        first = false;
    }
    return first ? "0" : os.str();
}

Bivariate classical_curve(const WeightFamily& f, const std::vector<Rational>& s, const Rational& gamma) {
    if (!f.is_polynomial())
        throw ConfigError("classical curve polynomial needs polynomial G; " + f.describe() +
                          " is available only in symbolic form");
    const int M = f.degree();
    std::vector<Rational> g(static_cast<size_t>(M) + 1);
    for (int i = 0; i <= M; ++i) g[static_cast<size_t>(i)] = g_coeff(f, i);
    Bivariate P;
    P.coeffs[{1, 1}] += Rational(1);
    std::vector<Rational> gk{Rational(1)};  // G(u)^k
    Rational gamma_k(1);
    for (int k = 1; k <= static_cast<int>(s.size()); ++k) {
        std::vector<Rational> next(gk.size() + g.size() - 1, Rational(0));
        for (size_t a = 0; a < gk.size(); ++a)
            for (size_t c = 0; c < g.size(); ++c) next[a + c] += gk[a] * g[c];
        gk = std::move(next);
        gamma_k *= gamma;
        const Rational sk = s[static_cast<size_t>(k - 1)];
        if (sk.is_zero()) continue;
        // k s_k gamma^k x^k G(xy)^k, u^m -> x^m y^m
        for (size_t m = 0; m < gk.size(); ++m)
            if (!gk[m].is_zero())
                P.coeffs[{k + static_cast<int>(m), static_cast<int>(m)}] -= Rational(k) * sk * gamma_k * gk[m];
    }
    for (auto it = P.coeffs.begin(); it != P.coeffs.end();) it = it->second.is_zero() ? P.coeffs.erase(it) : ++it;
    return P;
}

std::string classical_curve_text(const WeightFamily& f, const std::vector<Rational>& s, const Rational& gamma) {
    std::string G;
    switch (f.kind) {
    case FamilyKind::FiniteC:
        for (const auto& c : f.c) G += "(1 + " + c.str() + " xy)";
        if (G.empty()) G = "1";
        break;
    case FamilyKind::DualFiniteC:
        for (const auto& c : f.c) G += "(1 - " + c.str() + " xy)^(-1)";
        if (G.empty()) G = "1";
        break;
    case FamilyKind::Exponential: G = "e^(xy)"; break;
    case FamilyKind::Quantum: G = "prod_{j>=1} (1 + " + f.q.str() + "^j xy)"; break;
    }
    std::string rhs;
    Rational gamma_k(1);
    for (int k = 1; k <= static_cast<int>(s.size()); ++k) {
        gamma_k *= gamma;
        const Rational sk = s[static_cast<size_t>(k - 1)];
        if (sk.is_zero()) continue;
        if (!rhs.empty()) rhs += " + ";
        rhs += (Rational(k) * sk * gamma_k).str() + " x^" + idx(k) + " [" + G + "]^" + idx(k);
    }
    return "xy = " + (rhs.empty() ? std::string("0") : rhs);
}

CheckReport basis_suite(const BasisWindow& b) {
    CheckReport rep;
    rep.suite = "adapted basis";
    rep.merge(pairing_check(b));
    const int cutoff = b.family.kind == FamilyKind::FiniteC ? -1 : b.depth + b.k_hi;
    rep.merge(recursion_Q(b, cutoff).report);
    rep.merge(euler_P(b));
    rep.merge(ladder_check(b));
    rep.merge(kac_schwarz_check(b));
    rep.merge(quantum_curve_residual(b).report);
    return rep;
}

}  // namespace hwtau
