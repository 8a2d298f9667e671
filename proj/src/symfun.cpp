#include "hwtau/symfun.hpp"

#include "hwtau/errors.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace hwtau {

namespace {

int g_cap = 10;
std::mutex g_mutex;

// Beta-set of a partition with exactly `len` beads.
std::vector<int> beta_set(const std::vector<int>& parts, int len) {
    std::vector<int> b(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) {
        int part = i < static_cast<int>(parts.size()) ? parts[i] : 0;
        b[i] = part + len - 1 - i;
    }
    return b;
}

std::vector<int> from_beta_set(std::vector<int> b) {
    std::sort(b.begin(), b.end(), std::greater<int>());
    const int len = static_cast<int>(b.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        int p = b[i] - (len - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return parts;
}

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;
std::map<MemoKey, long long>& memo() {
    static std::map<MemoKey, long long> m;
    return m;
}

// mu_rest is sorted decreasingly; removes the first part each step.
long long mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu_rest, size_t pos) {
    if (pos == mu_rest.size()) return lambda.empty() ? 1 : 0;
    MemoKey key{lambda, std::vector<int>(mu_rest.begin() + static_cast<long>(pos), mu_rest.end())};
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        auto it = memo().find(key);
        if (it != memo().end()) return it->second;
    }
    const int k = mu_rest[pos];
    const int len = static_cast<int>(lambda.size());
    std::vector<int> b = beta_set(lambda, len);
    long long total = 0;
    for (int idx = 0; idx < len; ++idx) {
        const int x = b[idx];
        const int y = x - k;
        if (y < 0 || std::find(b.begin(), b.end(), y) != b.end()) continue;
        int between = 0;
        for (int v : b)
            if (v > y && v < x) ++between;
        std::vector<int> nb = b;
        nb[idx] = y;
        long long sub = mn_rec(from_beta_set(nb), mu_rest, pos + 1);
        total += (between % 2 == 0) ? sub : -sub;
    }
    std::lock_guard<std::mutex> lock(g_mutex);
    memo().emplace(std::move(key), total);
    return total;
}

}  // namespace

int char_table_cap() { return g_cap; }

void set_char_table_cap(int cap) {
    if (cap < 1) throw ConfigError("character table cap must be positive");
    g_cap = cap;
}

long long character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) throw DomainError("character of mismatched weights");
    return mn_rec(lambda.parts(), mu.parts(), 0);
}

CharTable::CharTable(int n) : n_(n), parts_(enumerate_partitions(n)) {
    for (size_t i = 0; i < parts_.size(); ++i) idx_.emplace(parts_[i], i);
    values_.assign(parts_.size(), std::vector<long long>(parts_.size(), 0));
    for (size_t i = 0; i < parts_.size(); ++i)
        for (size_t j = 0; j < parts_.size(); ++j) values_[i][j] = character(parts_[i], parts_[j]);
}

size_t CharTable::index(const Partition& p) const {
    auto it = idx_.find(p);
    if (it == idx_.end()) throw DomainError("partition " + p.str() + " not in table");
    return it->second;
}

long long CharTable::operator()(const Partition& irrep, const Partition& cls) const {
    return values_[index(irrep)][index(cls)];
}

std::shared_ptr<const CharTable> char_table(int n) {
    if (n < 0) throw DomainError("negative table size");
    if (n > g_cap)
        throw ResourceError("character table for S_" + std::to_string(n) + " exceeds cap " + std::to_string(g_cap));
    static std::mutex cache_mutex;
    static std::map<int, std::shared_ptr<const CharTable>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    auto t = std::make_shared<const CharTable>(n);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(n, t).first->second;
}

std::map<Partition, Rational> schur_to_power(const Partition& lambda) {
    auto table = char_table(lambda.weight());
    std::map<Partition, Rational> out;
    for (const auto& mu : table->partitions()) {
        long long chi = (*table)(lambda, mu);
        if (chi != 0) out.emplace(mu, Rational(Integer(static_cast<long>(chi)), z_order(mu)));
    }
    return out;
}

Rational power_sum_factor(const Partition& mu) { return Rational(part_product(mu)); }

GradedPoly schur_poly(const Partition& lambda, Alphabet which, int w_max, int d_max) {
    GradedPoly p(w_max, d_max);
    for (const auto& [mu, c] : schur_to_power(lambda)) {
        ExpVec e = mu.exponent_vector();
        Monomial m = which == Alphabet::T ? make_monomial(e, {}, 0) : make_monomial({}, e, 0);
        p.add_term(m, c * power_sum_factor(mu));
    }
    return p;
}

namespace {

// sum over index tuples (strict or weak) and all permutations of the exponents.
Rational symmetrized_sum(const std::vector<int>& parts, const std::vector<Rational>& c, bool weak) {
    const int k = static_cast<int>(parts.size());
    const int n = static_cast<int>(c.size());
    if (k == 0) return Rational(1);
    if (n == 0) return Rational(0);
    std::vector<int> perm(static_cast<size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    Rational total(0);
    std::vector<int> idx(static_cast<size_t>(k));
    do {
        // enumerate index tuples i_1 <(=) i_2 <(=) ... <(=) i_k
        std::function<void(int, int, Rational)> rec = [&](int j, int start, Rational acc) {
            if (j == k) {
                total += acc;
                return;
            }
            for (int i = start; i < n; ++i) {
                idx[j] = i;
                rec(j + 1, weak ? i : i + 1, acc * pow(c[i], parts[perm[j]]));
            }
        };
        rec(0, 0, Rational(1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

Rational elementary(int k, const std::vector<Rational>& c) {
    if (k < 0) return Rational(0);
    std::vector<Rational> e(static_cast<size_t>(k) + 1, Rational(0));
    e[0] = 1;
    for (const auto& x : c)
        for (int j = k; j >= 1; --j) e[j] += x * e[j - 1];
    return e[k];
}

Rational complete(int k, const std::vector<Rational>& c) {
    if (k < 0) return Rational(0);
    std::vector<Rational> h(static_cast<size_t>(k) + 1, Rational(0));
    h[0] = 1;
    for (const auto& x : c)
        for (int j = 1; j <= k; ++j) h[j] += x * h[j - 1];
    return h[k];
}

Rational power_sum(int k, const std::vector<Rational>& c) {
    Rational s(0);
    for (const auto& x : c) s += pow(x, k);
    return s;
}

Rational eval_basis(Basis basis, const Partition& lambda, const std::vector<Rational>& c) {
    Rational r(1);
    switch (basis) {
    case Basis::e:
        for (int p : lambda.parts()) r *= elementary(p, c);
        return r;
    case Basis::h:
        for (int p : lambda.parts()) r *= complete(p, c);
        return r;
    case Basis::p:
        for (int p : lambda.parts()) r *= power_sum(p, c);
        return r;
    case Basis::m:
        return symmetrized_sum(lambda.parts(), c, false) / Rational(aut_order(lambda));
    case Basis::f: {
        Rational v = symmetrized_sum(lambda.parts(), c, true) / Rational(aut_order(lambda));
        return colength(lambda) % 2 == 0 ? v : -v;
    }
    }
    return r;
}

std::vector<Rational> h_poly_list(int n, int sign, const Rational& beta, const std::vector<Rational>& s) {
    if (beta.is_zero()) throw DomainError("h_poly needs nonzero beta");
    if (sign != 1 && sign != -1) throw DomainError("h_poly sign must be +1 or -1");
    std::vector<Rational> h(static_cast<size_t>(std::max(n, 0)) + 1, Rational(0));
    h[0] = 1;
    std::vector<Rational> pk(h.size(), Rational(0));
    for (int k = 1; k <= n && k <= static_cast<int>(s.size()); ++k)
        pk[k] = Rational(sign * k) * s[k - 1] / beta;
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        for (int k = 1; k <= m; ++k)
            if (!pk[k].is_zero()) acc += pk[k] * h[m - k];
        h[m] = acc / Rational(m);
    }
    return h;
}

Rational h_poly(int n, int sign, const Rational& beta, const std::vector<Rational>& s) {
    if (n < 0) return Rational(0);
    return h_poly_list(n, sign, beta, s)[n];
}

}  // namespace hwtau
