#include "hwtau/group_oracle.hpp"

#include "hwtau/errors.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace hwtau {

Perm identity_perm(int n) {
    Perm p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<uint8_t>(i);
    return r;
}

Partition cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> parts;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        parts.push_back(len);
    }
    return Partition(parts);
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = identity_perm(n);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

ClassAlgebra::ClassAlgebra(int n) : n_(n), classes_(enumerate_partitions(n)) {
    if (n < 0 || n > class_algebra_cap)
        throw ResourceError("class algebra for S_" + std::to_string(n) + " exceeds cap " +
                            std::to_string(class_algebra_cap));
    for (size_t i = 0; i < classes_.size(); ++i) idx_.emplace(classes_[i], i);
    members_.resize(classes_.size());
    for (auto& p : all_perms(n)) members_[idx_.at(cycle_type(p))].push_back(std::move(p));
    for (const auto& m : members_) sizes_.emplace_back(static_cast<unsigned long>(m.size()));
    const size_t k = classes_.size();
    c_.assign(k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
    for (size_t target = 0; target < k; ++target) {
        const Perm& z = members_[target].front();
        for (size_t i = 0; i < k; ++i)
            for (const auto& a : members_[i]) {
                // a * b = z  =>  b = a^{-1} z
                Perm b = compose(inverse(a), z);
                ++c_[i][idx_.at(cycle_type(b))][target];
            }
    }
}

size_t ClassAlgebra::index(const Partition& p) const {
    auto it = idx_.find(p);
    if (it == idx_.end()) throw DomainError("profile " + p.str() + " is not a class of S_" + std::to_string(n_));
    return it->second;
}

std::vector<Integer> ClassAlgebra::multiply(const std::vector<Integer>& x, size_t i) const {
    const size_t k = classes_.size();
    std::vector<Integer> y(k, Integer(0));
    for (size_t j = 0; j < k; ++j) {
        if (x[j] == 0) continue;
        for (size_t t = 0; t < k; ++t)
            if (c_[j][i][t] != 0) y[t] += x[j] * Integer(static_cast<long>(c_[j][i][t]));
    }
    return y;
}

std::shared_ptr<const ClassAlgebra> build_class_algebra(int n) {
    static std::mutex m;
    static std::map<int, std::shared_ptr<const ClassAlgebra>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto a = std::make_shared<const ClassAlgebra>(n);
    cache.emplace(n, a);
    return a;
}

namespace {

bool weights_match(int n, const std::vector<Partition>& profiles) {
    return std::all_of(profiles.begin(), profiles.end(), [n](const Partition& p) { return p.weight() == n; });
}

// Visits every tuple of the first k-1 profiles; the last factor is forced.
template <typename Visit>
void for_each_tuple(int n, const std::vector<Partition>& profiles, long long budget, Visit visit) {
    auto alg = build_class_algebra(n);
    const size_t k = profiles.size();
    std::vector<const std::vector<Perm>*> lists;
    long long total = 1;
    for (size_t i = 0; i + 1 < k; ++i) {
        lists.push_back(&alg->members(alg->index(profiles[i])));
        total *= static_cast<long long>(lists.back()->size());
        if (total > budget) throw ResourceError("tuple enumeration exceeds budget of " + std::to_string(budget));
    }
    const Partition& last = profiles.back();
    std::vector<const Perm*> chosen(lists.size());
    std::function<void(size_t, const Perm&)> rec = [&](size_t depth, const Perm& prod) {
        if (depth == lists.size()) {
            Perm closing = inverse(prod);
            if (cycle_type(closing) == last) {
                chosen.resize(lists.size());
                visit(chosen, closing);
            }
            return;
        }
        for (const auto& p : *lists[depth]) {
            chosen[depth] = &p;
            rec(depth + 1, compose(prod, p));
        }
    };
    rec(0, identity_perm(n));
}

bool transitive(int n, const std::vector<const Perm*>& gens, const Perm& extra) {
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto join = [&](const Perm& p) {
        for (int i = 0; i < n; ++i) parent[find(i)] = find(p[i]);
    };
    for (const auto* g : gens) join(*g);
    join(extra);
    for (int i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

}  // namespace

Rational factorization_count(int n, const std::vector<Partition>& profiles) {
    if (!weights_match(n, profiles)) return Rational(0);
    if (n == 0) return Rational(1);
    auto alg = build_class_algebra(n);
    std::vector<Integer> x(alg->classes().size(), Integer(0));
    x[alg->identity_index()] = 1;
    for (const auto& p : profiles) x = alg->multiply(x, alg->index(p));
    return Rational(x[alg->identity_index()], factorial(static_cast<unsigned>(n)));
}

Rational factorization_count_direct(int n, const std::vector<Partition>& profiles, long long budget) {
    if (!weights_match(n, profiles)) return Rational(0);
    if (n == 0 || profiles.empty()) return Rational(1);
    long long count = 0;
    for_each_tuple(n, profiles, budget, [&](const std::vector<const Perm*>&, const Perm&) { ++count; });
    return Rational(Integer(static_cast<long>(count)), factorial(static_cast<unsigned>(n)));
}

Rational transitive_factorization_count(int n, const std::vector<Partition>& profiles, long long budget) {
    if (!weights_match(n, profiles)) return Rational(0);
    if (n <= 1) return Rational(1);
    if (profiles.empty()) return Rational(0);
    long long count = 0;
    for_each_tuple(n, profiles, budget, [&](const std::vector<const Perm*>& gens, const Perm& last) {
        if (transitive(n, gens, last)) ++count;
    });
    return Rational(Integer(static_cast<long>(count)), factorial(static_cast<unsigned>(n)));
}

Integer monotone_path_count(int n, const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.weight() != n || nu.weight() != n) return Integer(0);
    auto alg = build_class_algebra(n);
    const auto& starts = alg->members(alg->index(nu));
    const int d = lambda.weight();
    // transpositions (a, b), a < b, ordered by b
    std::vector<std::pair<int, int>> trans;
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a) trans.emplace_back(a, b);
    std::map<Perm, long long> products;
    std::vector<int> bs;
    std::function<void(size_t, const Perm&)> rec = [&](size_t from, const Perm& prod) {
        if (static_cast<int>(bs.size()) == d) {
            std::map<int, int> mult;
            for (int b : bs) ++mult[b];
            std::vector<int> sig;
            for (const auto& [b, m] : mult) sig.push_back(m);
            if (Partition(sig) == lambda) ++products[prod];
            return;
        }
        for (size_t t = from; t < trans.size(); ++t) {
            Perm step = identity_perm(n);
            std::swap(step[trans[t].first], step[trans[t].second]);
            const int b = trans[t].second;
            bs.push_back(b);
            // any a may follow within the same b, so restart at the block of b
            rec(static_cast<size_t>(b * (b - 1) / 2), compose(step, prod));
            bs.pop_back();
        }
    };
    rec(0, identity_perm(n));
    long long count = 0;
    for (const auto& [prod, mult] : products)
        for (const auto& h : starts)
            if (cycle_type(compose(prod, h)) == mu) count += mult;
    return Integer(static_cast<long>(count));
}

}  // namespace hwtau
