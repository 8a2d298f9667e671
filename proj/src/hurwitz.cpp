#include "hwtau/hurwitz.hpp"

#include "hwtau/errors.hpp"
#include "hwtau/group_oracle.hpp"
#include "hwtau/symfun.hpp"
#include "hwtau/tau.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>

namespace hwtau {

std::string route_name(Route r) {
    switch (r) {
    case Route::characters: return "characters";
    case Route::profiles: return "profiles";
    case Route::paths: return "paths";
    case Route::log: return "log";
    }
    return "?";
}

int configured_threads() {
    const char* env = std::getenv("HURWITZ_TAU_THREADS");
    if (!env) return 1;
    try {
        const int n = std::stoi(env);
        return std::clamp(n, 1, 64);
    } catch (const std::exception&) {
        throw ConfigError(std::string("HURWITZ_TAU_THREADS is not an integer: ") + env);
    }
}

namespace {

Rational lookup(const std::map<HurwitzKey, Rational>& m, const Partition& mu, const Partition& nu, int d,
                int N, int d_max) {
    if (mu.weight() != nu.weight()) return Rational(0);
    if (mu.weight() != N) throw DomainError("table holds |mu| = " + std::to_string(N));
    if (d < 0) return Rational(0);
    if (d > d_max) throw OutOfWindowError("d = " + std::to_string(d) + " beyond d_max " + std::to_string(d_max));
    auto it = m.find({mu, nu, d});
    return it == m.end() ? Rational(0) : it->second;
}

// Multisets of non-identity classes of S_N with total colength d, as sorted index lists.
void for_each_profile_multiset(int N, int d, const std::function<void(const std::vector<Partition>&)>& visit) {
    std::vector<Partition> classes;
    for (const auto& p : enumerate_partitions(N))
        if (colength(p) > 0 && colength(p) <= d) classes.push_back(p);
    std::vector<Partition> chosen;
    std::function<void(size_t, int)> rec = [&](size_t from, int left) {
        if (left == 0) {
            visit(chosen);
            return;
        }
        for (size_t i = from; i < classes.size(); ++i) {
            const int c = colength(classes[i]);
            if (c > left) continue;
            chosen.push_back(classes[i]);
            rec(i, left - c);
            chosen.pop_back();
        }
    };
    rec(0, d);
}

// |aut lambda| / A(P) * profile_weight, A(P) = prod of multiplicities! of identical profiles.
Rational multiset_weight(const WeightFamily& f, const std::vector<Partition>& P) {
    std::vector<int> cl;
    for (const auto& p : P) cl.push_back(colength(p));
    const Partition lambda(cl);
    Integer A = 1;
    for (size_t i = 0; i < P.size();) {
        size_t j = i;
        while (j < P.size() && P[j] == P[i]) ++j;
        A *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return Rational(aut_order(lambda), A) * profile_weight(f, lambda);
}

}  // namespace

Rational HurwitzTable::H(const Partition& mu, const Partition& nu, int d) const {
    return lookup(entries, mu, nu, d, N, d_max);
}

Rational HurwitzTable::H_connected(const Partition& mu, const Partition& nu, int d) const {
    return lookup(connected, mu, nu, d, N, d_max);
}

BetaSeries H_via_characters(const WeightFamily& f, const Partition& mu, const Partition& nu, int d_max) {
    BetaSeries out(d_max);
    if (mu.weight() != nu.weight()) return out;
    const int n = mu.weight();
    const Rational norm = Rational(1) / Rational(Integer(z_order(mu) * z_order(nu)));
    for (const auto& lambda : enumerate_partitions(n)) {
        const long long a = n == 0 ? 1 : character(lambda, mu);
        const long long b = n == 0 ? 1 : character(lambda, nu);
        if (a == 0 || b == 0) continue;
        out += content_product(f, lambda, 0, d_max).value * (Rational(a) * Rational(b) * norm);
    }
    return out;
}

Rational H_via_profiles(const WeightFamily& f, const Partition& mu, const Partition& nu, int d) {
    if (mu.weight() != nu.weight() || d < 0) return Rational(0);
    const int n = mu.weight();
    Rational total(0);
    for_each_profile_multiset(n, d, [&](const std::vector<Partition>& P) {
        const Rational w = multiset_weight(f, P);
        if (w.is_zero()) return;
        std::vector<Partition> profiles = P;
        profiles.push_back(mu);
        profiles.push_back(nu);
        total += w * factorization_count(n, profiles);
    });
    return total;
}

Rational H_via_paths(const WeightFamily& f, const Partition& mu, const Partition& nu, int d) {
    if (mu.weight() != nu.weight() || d < 0) return Rational(0);
    const int n = mu.weight();
    if (n == 0) return Rational(d == 0 ? 1 : 0);
    Rational total(0);
    for (const auto& lambda : enumerate_partitions(d)) {
        const Rational w = path_weight(f, lambda);
        if (w.is_zero()) continue;
        const Integer m = monotone_path_count(n, lambda, mu, nu);
        if (m != 0) total += w * Rational(m);
    }
    return total / Rational(factorial(static_cast<unsigned>(n)));
}

Rational H_connected_oracle(const WeightFamily& f, const Partition& mu, const Partition& nu, int d,
                            long long budget) {
    if (mu.weight() != nu.weight() || d < 0) return Rational(0);
    const int n = mu.weight();
    Rational total(0);
    for_each_profile_multiset(n, d, [&](const std::vector<Partition>& P) {
        const Rational w = multiset_weight(f, P);
        if (w.is_zero()) return;
        std::vector<Partition> profiles{mu};
        profiles.insert(profiles.end(), P.begin(), P.end());
        profiles.push_back(nu);
        total += w * transitive_factorization_count(n, profiles, budget);
    });
    return total;
}

std::map<HurwitzKey, Rational> connected_from_log(const GradedPoly& log_body, int N, int d_max) {
    if (N > log_body.w_max())
        throw OutOfWindowError("connected numbers at N = " + std::to_string(N) + " need w_max >= N");
    if (d_max > log_body.d_max())
        throw OutOfWindowError("connected numbers to d = " + std::to_string(d_max) + " need d_max >= that");
    std::map<HurwitzKey, Rational> out;
    const auto parts = enumerate_partitions(N);
    for (const auto& mu : parts)
        for (const auto& nu : parts) {
            const BetaSeries c = log_body.coeff(trimmed(mu.exponent_vector()), trimmed(nu.exponent_vector()), N);
            const Rational norm = Rational(1) / (power_sum_factor(mu) * power_sum_factor(nu));
            for (int d = 0; d <= d_max; ++d)
                if (!c[d].is_zero()) out[{mu, nu, d}] = c[d] * norm;
        }
    return out;
}

HurwitzTable hurwitz_table(const WeightFamily& f, int N, int d_max, bool with_connected) {
    if (N < 0 || d_max < 0) throw ConfigError("hurwitz table needs N, d_max >= 0");
    if (N > char_table_cap())
        throw ResourceError("N = " + std::to_string(N) + " exceeds character cap " + std::to_string(char_table_cap()));
    HurwitzTable t;
    t.family = f;
    t.N = N;
    t.d_max = d_max;
    t.route = Route::characters;
    const auto parts = enumerate_partitions(N);
    std::vector<std::pair<size_t, size_t>> jobs;
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = 0; j < parts.size(); ++j) jobs.emplace_back(i, j);
    std::vector<BetaSeries> results(jobs.size());
    if (N > 0) char_table(N);  // build once before workers share it
    const int threads = std::min<int>(configured_threads(), static_cast<int>(jobs.size()));
    auto work = [&](size_t from) {
        for (size_t k = from; k < jobs.size(); k += static_cast<size_t>(std::max(threads, 1)))
            results[k] = H_via_characters(f, parts[jobs[k].first], parts[jobs[k].second], d_max);
    };
    if (threads <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) pool.emplace_back(work, static_cast<size_t>(w));
        for (auto& th : pool) th.join();
    }
    for (size_t k = 0; k < jobs.size(); ++k)
        for (int d = 0; d <= d_max; ++d)
            if (!results[k][d].is_zero()) t.entries[{parts[jobs[k].first], parts[jobs[k].second], d}] = results[k][d];
    if (with_connected) {
        const TauSeries tau = build_tau(f, N, d_max);
        t.connected = connected_from_log(log_tau(tau), N, d_max);
    }
    return t;
}

HurwitzTable H_connected(const WeightFamily& f, int N, int d_max) {
    HurwitzTable t;
    t.family = f;
    t.N = N;
    t.d_max = d_max;
    t.route = Route::log;
    const TauSeries tau = build_tau(f, N, d_max);
    t.connected = connected_from_log(log_tau(tau), N, d_max);
    t.entries = t.connected;
    return t;
}

RouteReport verify_routes(const WeightFamily& f, int N_max, int d_max) {
    RouteReport rep;
    for (int n = 1; n <= N_max; ++n) {
        const auto parts = enumerate_partitions(n);
        for (const auto& mu : parts)
            for (const auto& nu : parts) {
                const BetaSeries r1 = H_via_characters(f, mu, nu, d_max);
                for (int d = 0; d <= d_max; ++d) {
                    const Rational r2 = H_via_profiles(f, mu, nu, d);
                    const Rational r3 = H_via_paths(f, mu, nu, d);
                    ++rep.checked;
                    if (r1[d] != r2 || r1[d] != r3)
                        rep.mismatches.push_back(f.label + " mu=" + mu.str() + " nu=" + nu.str() +
                                                 " d=" + std::to_string(d) + ": characters " + r1[d].str() +
                                                 ", profiles " + r2.str() + ", paths " + r3.str());
                }
            }
    }
    return rep;
}

}  // namespace hwtau
