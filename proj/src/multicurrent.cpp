#include "hwtau/errors.hpp"
#include "hwtau/hurwitz.hpp"
#include "hwtau/symfun.hpp"
#include "hwtau/tau.hpp"

#include <algorithm>
#include <climits>

namespace hwtau {

XPoly build_F_n(const WeightFamily& f, int n, int w_max, int d_max, SConvention conv, bool connected) {
    if (n < 1) throw ConfigError("F_n needs n >= 1");
    XPoly out;
    out.n = n;
    GradedPoly log_body(0, 0);
    if (connected) log_body = log_tau(build_tau(f, w_max, d_max));
    for (int N = n; N <= w_max; ++N) {
        const auto conn = connected ? connected_from_log(log_body, N, d_max) : std::map<HurwitzKey, Rational>{};
        for (const auto& mu : enumerate_partitions(N)) {
            if (mu.length() != n) continue;
            std::vector<int> a = mu.parts();
            std::sort(a.begin(), a.end());
            std::vector<std::vector<int>> arr;
            do arr.push_back(a);
            while (std::next_permutation(a.begin(), a.end()));
            const Rational aut(aut_order(mu));
            for (const auto& nu : enumerate_partitions(N)) {
                BetaSeries h(d_max);
                if (connected) {
                    for (int d = 0; d <= d_max; ++d) {
                        auto it = conn.find({mu, nu, d});
                        if (it != conn.end()) h.set(d, it->second);
                    }
                } else {
                    h = H_via_characters(f, mu, nu, d_max);
                }
                if (h.is_zero()) continue;
                const ExpVec s = trimmed(nu.exponent_vector());
                const BetaLaurent v = with_convention(h * (aut * power_sum_factor(nu)), s, conv);
                for (const auto& x : arr) out.add(XKey{x, s, N}, v);
            }
        }
    }
    return out;
}

WFReport check_W_equals_dF(const WeightFamily& f, int n, int x_degree, int d_max, bool connected) {
    WFReport rep;
    rep.n = n;
    rep.x_degree = x_degree;
    rep.connected = connected;
    const int w_max = x_degree + n;
    const TauSeries tau = build_tau(f, w_max, d_max, SConvention::beta_rescaled);
    const XPoly W = multicurrent_W(tau, n, x_degree, connected);
    const XPoly dF = build_F_n(f, n, w_max, d_max, SConvention::beta_rescaled, connected).mixed_derivative();
    rep.terms_checked = static_cast<int>(std::max(W.terms.size(), dF.terms.size()));
    std::string why;
    if (!xpoly_equal(W, dF, d_max, &why)) rep.mismatches.push_back("W_" + std::to_string(n) + ": " + why);
    if (connected) {
        // genus slices: beta power n + 2g - 2
        const int top = std::min(W.max_power(), dF.max_power());
        for (int g = 0; top != INT_MAX && n + 2 * g - 2 <= top; ++g) {
            const int p = n + 2 * g - 2;
            std::string w2;
            if (!xpoly_equal(W.beta_slice(p), dF.beta_slice(p), p, &w2))
                rep.mismatches.push_back("genus " + std::to_string(g) + ": " + w2);
        }
    }
    rep.ok = rep.mismatches.empty();
    return rep;
}

}  // namespace hwtau
