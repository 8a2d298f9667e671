#include "hwtau/correlators.hpp"

#include "hwtau/errors.hpp"
#include "hwtau/symfun.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

namespace hwtau {

namespace {

using Mono = std::vector<int>;
using SparsePoly = std::map<Mono, Rational>;

std::string cell_name(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

SparsePoly multiply(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Mono e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Rational& slot = out[e];
            slot += ca * cb;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

// Value of K~_2 at one cell from the two-point substitution, or nullopt beyond w_max.
std::optional<Rational> k2_cell(const SparsePoly& p2, int w_max, int ez, int ew) {
    const int N = -ez - ew - 1;
    if (N < 0) return Rational(0);
    if (N > w_max) return std::nullopt;
    Rational v;
    for (int b = 0; b <= N; ++b) {
        if (ew + b < 0) continue;
        auto it = p2.find(Mono{-(N - b), -b});
        if (it != p2.end()) v += it->second;
    }
    return v;
}

Rational entry(const std::vector<std::vector<Rational>>& m, int i, int j) {
    return m[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

int s_support(const std::vector<Rational>& s) {
    int L = 0;
    for (size_t k = 0; k < s.size(); ++k)
        if (s[k] != 0) L = static_cast<int>(k) + 1;
    return L;
}

// Univariate Laurent polynomial helpers for the generating function.
using UPoly = std::map<int, Rational>;

void add_into(UPoly& acc, const UPoly& p, const Rational& c) {
    for (const auto& [e, v] : p) acc[e] += c * v;
}

// (sign_S S(u) + beta u d/du) p with S(u) = sum k s_k u^k.
UPoly apply_euler_shift(const UPoly& p, const std::vector<Rational>& s, const Rational& beta, int s_sign,
                        int d_sign) {
    UPoly out;
    for (const auto& [e, v] : p) {
        out[e] += Rational(d_sign) * beta * Rational(e) * v;
        for (size_t k = 0; k < s.size(); ++k) {
            if (s[k] == 0) continue;
            const int kk = static_cast<int>(k) + 1;
            out[e + kk] += Rational(s_sign * kk) * s[k] * v;
        }
    }
    return out;
}

// G(X) p for polynomial G with coefficients e_0..e_M.
UPoly apply_G(const std::vector<Rational>& g, const UPoly& p, const std::vector<Rational>& s, const Rational& beta,
              int s_sign, int d_sign) {
    UPoly out;
    UPoly cur = p;
    for (size_t i = 0; i < g.size(); ++i) {
        if (i > 0) cur = apply_euler_shift(cur, s, beta, s_sign, d_sign);
        add_into(out, cur, g[i]);
    }
    return out;
}

}  // namespace

Rational KernelWindow::at(int ez, int ew) const {
    auto it = cells.find({ez, ew});
    if (it == cells.end())
        throw OutOfWindowError("kernel cell " + cell_name(ez, ew) + " is outside the computed window");
    return it->second;
}

std::string KernelWindow::str() const {
    std::ostringstream os;
    for (int ez = z_hi; ez >= z_lo; --ez) {
        for (int ew = w_lo; ew <= w_hi; ++ew) {
            if (ew > w_lo) os << ' ';
            os << at(ez, ew);
        }
        os << '\n';
    }
    return os.str();
}

bool kernel_equal(const KernelWindow& a, const KernelWindow& b, std::string* mismatch) {
    for (const auto& [key, v] : a.cells) {
        auto it = b.cells.find(key);
        if (it == b.cells.end()) continue;
        if (it->second != v) {
            if (mismatch)
                *mismatch = "cell " + cell_name(key.first, key.second) + ": " + v.str() + " vs " + it->second.str();
            return false;
        }
    }
    return true;
}

std::map<std::vector<int>, Rational> tau_substituted(const EvaluatedTau& tau, int n) {
    if (n < 1) throw ConfigError("tau_substituted needs at least one pair of points");
    const int vars = 2 * n;
    // B_i = (sum_j w_j^{-i} - sum_j z_j^{-i}) / i, and its powers on demand.
    std::map<std::pair<int, int>, SparsePoly> powers;
    std::function<const SparsePoly&(int, int)> power = [&](int i, int m) -> const SparsePoly& {
        auto key = std::make_pair(i, m);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        SparsePoly p;
        if (m == 0) {
            p[Mono(static_cast<size_t>(vars), 0)] = Rational(1);
        } else {
            SparsePoly base;
            for (int v = 0; v < vars; ++v) {
                Mono e(static_cast<size_t>(vars), 0);
                e[static_cast<size_t>(v)] = -i;
                base[e] = Rational(v < n ? -1 : 1, i);
            }
            p = multiply(power(i, m - 1), base);
        }
        return powers.emplace(key, std::move(p)).first->second;
    };

    SparsePoly out;
    for (const auto& [t, c] : tau.coeffs) {
        if (c == 0) continue;
        SparsePoly term;
        term[Mono(static_cast<size_t>(vars), 0)] = c;
        for (size_t i = 0; i < t.size(); ++i)
            if (t[i] > 0) term = multiply(term, power(static_cast<int>(i) + 1, t[i]));
        for (const auto& [e, v] : term) out[e] += v;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

KernelWindow K2_via_tau(const EvaluatedTau& tau, int z_lo, int z_hi, int w_lo, int w_hi) {
    if (z_lo > z_hi || w_lo > w_hi) throw ConfigError("empty kernel window");
    const SparsePoly p2 = tau_substituted(tau, 1);
    KernelWindow out{z_lo, z_hi, w_lo, w_hi, {}, {}};
    for (int ez = z_lo; ez <= z_hi; ++ez) {
        for (int ew = w_lo; ew <= w_hi; ++ew) {
            auto v = k2_cell(p2, tau.w_max, ez, ew);
            if (!v)
                throw OutOfWindowError("K2 cell " + cell_name(ez, ew) + " needs tau through weight " +
                                       std::to_string(-ez - ew - 1) + " > w_max=" + std::to_string(tau.w_max));
            out.cells[{ez, ew}] = *v;
        }
    }
    return out;
}

KernelWindow K2_via_basis(const BasisWindow& b, int z_lo, int z_hi, int w_lo, int w_hi) {
    if (z_lo > z_hi || w_lo > w_hi) throw ConfigError("empty kernel window");
    KernelWindow out{z_lo, z_hi, w_lo, w_hi, {}, {}};
    for (int ez = z_lo; ez <= z_hi; ++ez) {
        for (int ew = w_lo; ew <= w_hi; ++ew) {
            const int j_lo = std::max(1, ew + 1);
            const int j_hi = -ez;
            Rational v;
            for (int j = j_lo; j <= j_hi; ++j) {
                if (!b.has(j) || !b.has(1 - j))
                    throw OutOfWindowError("K2 cell " + cell_name(ez, ew) + " needs w_" + std::to_string(j) +
                                           " and w*_" + std::to_string(1 - j) + "; basis range is [" +
                                           std::to_string(b.k_lo) + "," + std::to_string(b.k_hi) + "]");
                if (ew < b.lo() || ez < b.lo())
                    throw OutOfWindowError("K2 cell " + cell_name(ez, ew) + " lies below basis depth " +
                                           std::to_string(b.depth));
                v += b.wk(j).at(ew) * b.wk_dual(1 - j).at(ez);
            }
            out.cells[{ez, ew}] = v;
            out.j_cutoff[{ez, ew}] = std::max(j_hi, j_lo - 1);
        }
    }
    return out;
}

CDMatrix cd_matrix(const WeightFamily& f, const EvalPoint& pt, const std::vector<Rational>& s, int bound) {
    if (bound < 0) throw ConfigError("cd_matrix bound must be non-negative");
    const int n = 2 * bound + 1;
    const auto hp = h_poly_list(n, 1, pt.beta, s);
    const auto hm = h_poly_list(n, -1, pt.beta, s);
    auto h = [&](const std::vector<Rational>& l, int k) { return k < 0 ? Rational(0) : l[static_cast<size_t>(k)]; };

    CDMatrix out;
    out.bound = bound;
    const size_t sz = static_cast<size_t>(bound) + 1;
    out.A.assign(sz, std::vector<Rational>(sz));
    out.A_ghh.assign(sz, std::vector<Rational>(sz));
    out.A[0][0] = out.A_ghh[0][0] = Rational(1);
    for (int i = 1; i <= bound; ++i) {
        for (int j = 1; j <= bound; ++j) {
            Rational a;
            for (int k = -i; k <= j; ++k) {
                const Rational hh = h(hm, j - k) * h(hp, i + k);
                if (hh != 0) a += G_at(f, k, pt) * hh;
            }
            Rational g;
            for (int m = 0; m <= i + j; ++m) {
                const Rational hh = h(hm, m) * h(hp, i + j - m);
                if (hh != 0) g += G_at(f, j - m, pt) * hh;
            }
            out.A[static_cast<size_t>(i)][static_cast<size_t>(j)] = -a;
            out.A_ghh[static_cast<size_t>(i)][static_cast<size_t>(j)] = -g;
        }
    }
    return out;
}

CheckReport cd_finiteness(const WeightFamily& f, const EvalPoint& pt, const std::vector<Rational>& s, int margin) {
    if (!f.is_polynomial()) throw ConfigError("finite rank of A needs a polynomial weight family");
    const int LM = s_support(s) * f.degree();
    CheckReport rep;
    rep.suite = "cd_finiteness L*M=" + std::to_string(LM);
    const CDMatrix m = cd_matrix(f, pt, s, LM + margin);
    for (int i = 0; i <= m.bound; ++i) {
        for (int j = 0; j <= m.bound; ++j) {
            const std::string c = cell_name(i, j);
            check_equal(rep, "A vs A_ghh " + c, entry(m.A, i, j), entry(m.A_ghh, i, j), i, j);
            if (i + j > LM && i + j <= LM + margin) check_equal(rep, "A zero " + c, entry(m.A, i, j), Rational(0), i, j);
        }
    }
    return rep;
}

CDKernelResult cd_kernel(const BasisWindow& b, const EvaluatedTau& tau, int p_lo, int p_hi, int q_hi) {
    if (!b.family.is_polynomial()) throw ConfigError("cd_kernel needs a polynomial weight family");
    const int LM = b.support() * b.family.degree();
    if (!b.has(1) || !b.has(1 - LM))
        throw OutOfWindowError("cd_kernel needs w_k, w*_k for k in [" + std::to_string(1 - LM) + ",1]");
    const CDMatrix A = cd_matrix(b.family, b.point, b.s, LM);
    const Rational gamma = b.point.gamma;

    CDKernelResult out;
    out.report.suite = "cd_kernel";

    // gamma * sum A_ij w_{1-i}(w) w*_{1-j}(z), which equals (z-w) K~_2(z,w).
    auto numerator = [&](int ez, int ew) {
        Rational v;
        for (int i = 0; i <= LM; ++i)
            for (int j = 0; j <= LM; ++j) {
                const Rational& a = entry(A.A, i, j);
                if (a != 0) v += a * b.wk(1 - i).at(ew) * b.wk_dual(1 - j).at(ez);
            }
        return gamma * v;
    };

    const SparsePoly p2 = tau_substituted(tau, 1);
    const int reach = std::min(b.depth, tau.w_max);
    for (int ez = -reach; ez <= 0; ++ez) {
        for (int ew = -reach; ew <= 0; ++ew) {
            if (-ez - ew > tau.w_max) continue;
            auto it = p2.find(Mono{ez, ew});
            const Rational t = it == p2.end() ? Rational(0) : it->second;
            check_equal(out.report, "(z-w)K2 numerator " + cell_name(ez, ew), numerator(ez, ew), t, ez, ew);
        }
    }

    // K(x,x') on |x| > |x'|: 1/(x-x') = sum_m x'^m x^{-m-1}. The numerator at x^a x'^c is
    // numerator(-c, -a), since Psi+ carries w at 1/x and Psi- carries w* at 1/x'.
    if (p_lo > p_hi || q_hi < 0) throw ConfigError("empty x-kernel window");
    KernelWindow& kx = out.kernel_x;
    kx.z_lo = p_lo;
    kx.z_hi = p_hi;
    kx.w_lo = 0;
    kx.w_hi = q_hi;
    for (int p = p_lo; p <= p_hi; ++p) {
        for (int q = 0; q <= q_hi; ++q) {
            if (p + q + 1 > b.depth)
                throw OutOfWindowError("x-kernel cell " + cell_name(p, q) + " lies below basis depth " +
                                       std::to_string(b.depth));
            Rational v;
            for (int m = 0; m <= q; ++m) v += numerator(-(q - m), -(p + m + 1));
            kx.cells[{p, q}] = v;
            auto tv = k2_cell(p2, tau.w_max, -q - 1, -p - 1);
            if (!tv) {
                out.report.skipped.push_back("x-kernel cell " + cell_name(p, q) + " beyond tau w_max");
                continue;
            }
            check_equal(out.report, "K(x,x') = (xx')^{-1} K2(1/x',1/x) " + cell_name(p, q), v, *tv, p, q);
        }
    }
    return out;
}

GenAResult gen_A(const WeightFamily& f, const EvalPoint& pt, const std::vector<Rational>& s, int degree) {
    if (!f.is_polynomial()) throw ConfigError("gen_A needs a polynomial weight family");
    if (degree < 0) throw ConfigError("gen_A degree must be non-negative");
    std::vector<Rational> g;
    for (int i = 0; i <= f.degree(); ++i) g.push_back(elementary(i, f.c));

    // (r-exponent, t-exponent) -> coefficient; exact for t-exponents <= degree.
    std::map<std::pair<int, int>, Rational> acc;
    for (int m = 0; m <= degree; ++m) {
        // r G(S(t) - beta t d/dt) t^m r^{-m-1}
        const UPoly gt = apply_G(g, UPoly{{m, Rational(1)}}, s, pt.beta, 1, -1);
        for (const auto& [e, v] : gt)
            if (e <= degree) acc[{-m, e}] += v;
        // - t G(S(r) + beta r d/dr) t^m r^{-m-1}
        const UPoly gr = apply_G(g, UPoly{{-m - 1, Rational(1)}}, s, pt.beta, 1, 1);
        for (const auto& [e, v] : gr) acc[{e, m + 1}] -= v;
    }

    GenAResult out;
    out.report.suite = "gen_A";
    const CDMatrix A = cd_matrix(f, pt, s, degree);
    for (const auto& [key, v] : acc) {
        const auto [i, j] = key;
        if (j > degree) continue;
        if (i < 0) {
            check_equal(out.report, "negative r power cancels " + cell_name(i, j), v, Rational(0), i, j);
        } else if (i + j <= degree && v != 0) {
            out.coeffs[key] = v;
        }
    }
    for (int i = 0; i <= degree; ++i) {
        for (int j = 0; i + j <= degree; ++j) {
            auto it = out.coeffs.find({i, j});
            const Rational v = it == out.coeffs.end() ? Rational(0) : it->second;
            check_equal(out.report, "A(r,t) coefficient r^i t^j vs A_ij " + cell_name(i, j), v, entry(A.A, i, j), i,
                        j);
        }
    }
    return out;
}

OrthogonalityResult h_orthogonality(const std::vector<Rational>& s, int k_max, int N_max) {
    if (k_max < 0 || N_max < 0) throw ConfigError("h_orthogonality bounds must be non-negative");
    const int L = s_support(s);
    const auto hp = h_poly_list(N_max, 1, Rational(1), s);
    const auto hm = h_poly_list(N_max, -1, Rational(1), s);
    OrthogonalityResult out;
    out.report.suite = "h_orthogonality L=" + std::to_string(L);
    for (int k = 0; k <= k_max; ++k) {
        for (int N = 0; N <= N_max; ++N) {
            Rational v;
            for (int n = 0; n <= N; ++n) {
                const Rational nk = (k == 0) ? Rational(1) : pow(Rational(n), k);
                v += nk * hm[static_cast<size_t>(n)] * hp[static_cast<size_t>(N - n)];
            }
            out.values[{k, N}] = v;
            if (N > k * L)
                check_equal(out.report, "sum n^k h_n(-s) h_{N-n}(s) " + cell_name(k, N), v, Rational(0), k, N);
            else if (v != 0)
                ++out.nonzero_below_bound;
        }
    }
    return out;
}

CheckReport multipair_check(const EvaluatedTau& tau, int z_lo, int w_lo, int w_hi) {
    if (z_lo > -1 || w_lo > w_hi) throw ConfigError("empty multipair window");
    CheckReport rep;
    rep.suite = "multipair n=2";
    const SparsePoly p4 = tau_substituted(tau, 2);
    const SparsePoly p2 = tau_substituted(tau, 1);
    const int W = tau.w_max;

    // det(1/(z_i - w_j)) for |z_i| > |w_j|: sum w1^m1 z1^{-m1-1} w2^m2 z2^{-m2-1} minus the swap.
    auto det_cauchy = [](int z1, int z2, int w1, int w2) {
        int v = 0;
        if (w1 == -z1 - 1 && w1 >= 0 && w2 == -z2 - 1 && w2 >= 0) ++v;
        if (w2 == -z1 - 1 && w2 >= 0 && w1 == -z2 - 1 && w1 >= 0) --v;
        return v;
    };
    auto lhs = [&](int z1, int z2, int w1, int w2) {
        Rational v;
        for (const auto& [e, c] : p4) {
            const int d = det_cauchy(z1 - e[0], z2 - e[1], w1 - e[2], w2 - e[3]);
            if (d != 0) v += Rational(d) * c;
        }
        return v;
    };

    std::map<std::vector<int>, Rational> left;
    int nonzero = 0;
    for (int z1 = z_lo; z1 <= -1; ++z1)
        for (int z2 = z_lo; z2 <= -1; ++z2)
            for (int w1 = w_lo; w1 <= w_hi; ++w1)
                for (int w2 = w_lo; w2 <= w_hi; ++w2) {
                    const std::string c = "(" + std::to_string(z1) + "," + std::to_string(z2) + ";" +
                                          std::to_string(w1) + "," + std::to_string(w2) + ")";
                    if (-(z1 + z2 + w1 + w2) - 2 > W) {
                        rep.skipped.push_back("cell " + c + " beyond w_max");
                        continue;
                    }
                    auto k11 = k2_cell(p2, W, z1, w1);
                    auto k22 = k2_cell(p2, W, z2, w2);
                    auto k12 = k2_cell(p2, W, z1, w2);
                    auto k21 = k2_cell(p2, W, z2, w1);
                    if (!k11 || !k22 || !k12 || !k21) {
                        rep.skipped.push_back("cell " + c + " needs a pair kernel beyond w_max");
                        continue;
                    }
                    const Rational l = lhs(z1, z2, w1, w2);
                    left[{z1, z2, w1, w2}] = l;
                    if (l != 0) ++nonzero;
                    check_equal(rep, "tau det Cauchy = det K2 " + c, l, *k11 * *k22 - *k12 * *k21, z1, z2);
                }

    for (const auto& [e, v] : left) {
        auto it = left.find({e[1], e[0], e[2], e[3]});
        if (it == left.end() || e[0] > e[1]) continue;
        check_equal(rep, "z1<->z2 antisymmetry", v, -it->second, e[0], e[1]);
    }
    // z1 = z2: the coefficient of z^E w1^a w2^b collects all (z1, z2) with z1 + z2 = E.
    for (int E = 2 * z_lo; E <= -2; ++E) {
        if (E + 1 < z_lo) continue;
        for (int w1 = w_lo; w1 <= w_hi; ++w1)
            for (int w2 = w_lo; w2 <= w_hi; ++w2) {
                Rational sum;
                bool complete = true;
                for (int z1 = E + 1; z1 <= -1; ++z1) {
                    auto it = left.find({z1, E - z1, w1, w2});
                    if (it == left.end()) {
                        complete = false;
                        break;
                    }
                    sum += it->second;
                }
                if (complete) check_equal(rep, "z1 = z2 diagonal vanishes", sum, Rational(0), E, w1);
            }
    }
    CheckResult nt;
    nt.name = "nonzero cells compared";
    nt.window_lo = 0;
    nt.window_hi = nonzero;
    nt.pass = nonzero > 0;
    if (!nt.pass) nt.counterexample = "every compared cell vanished";
    rep.add(nt);
    return rep;
}

CheckReport q_tilde_prefactor_check(const BasisWindow& b) {
    CheckReport rep;
    rep.suite = "Q~+_{01} prefactor";
    const Rational q = Q_tilde_plus(b, 0, 1);
    check_equal(rep, "Q~+_{01} = g_00 g^{-1}_{-1,-1}", q, g_entry(b, 0, 0) * g_inv_entry(b, -1, -1));
    check_equal(rep, "g_00 g^{-1}_{-1,-1} = gamma", g_entry(b, 0, 0) * g_inv_entry(b, -1, -1), b.point.gamma);
    return rep;
}

}  // namespace hwtau
