#include "hwtau/partitions.hpp"

#include "hwtau/errors.hpp"

#include <algorithm>
#include <functional>

namespace hwtau {

Partition::Partition(std::vector<int> parts) {
    for (int p : parts)
        if (p < 0) throw DomainError("negative part in partition");
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    parts_ = std::move(parts);
    for (int p : parts_) weight_ += p;
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(static_cast<size_t>(n), 1)); }

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(static_cast<size_t>(weight_) + 1, 0);
    for (int p : parts_) ++m[p];
    return m;
}

std::vector<int> Partition::exponent_vector() const {
    std::vector<int> e(parts_.empty() ? 0 : static_cast<size_t>(parts_.front()), 0);
    for (int p : parts_) ++e[p - 1];
    return e;
}

Partition Partition::from_exponents(const std::vector<int>& e) {
    std::vector<int> parts;
    for (size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) parts.push_back(static_cast<int>(i) + 1);
    return Partition(parts);
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int j = 1; !parts_.empty() && j <= parts_.front(); ++j) {
        int n = 0;
        for (int p : parts_)
            if (p >= j) ++n;
        c.push_back(n);
    }
    return Partition(c);
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.weight_ != b.weight_) return a.weight_ <=> b.weight_;
    // Larger parts first in the canonical order.
    const size_t n = std::min(a.parts_.size(), b.parts_.size());
    for (size_t i = 0; i < n; ++i)
        if (a.parts_[i] != b.parts_[i]) return b.parts_[i] <=> a.parts_[i];
    return a.parts_.size() <=> b.parts_.size();
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw DomainError("negative partition weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

size_t partition_count(int n) {
    std::vector<size_t> p(static_cast<size_t>(std::max(n, 0)) + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = k; m <= n; ++m) p[m] += p[m - k];
    return p[n];
}

int colength(const Partition& p) { return p.weight() - p.length(); }

Integer aut_order(const Partition& p) {
    Integer r = 1;
    for (int m : p.multiplicities()) r *= factorial(static_cast<unsigned>(m));
    return r;
}

Integer z_order(const Partition& p) {
    Integer r = 1;
    auto m = p.multiplicities();
    for (size_t i = 1; i < m.size(); ++i) {
        for (int k = 0; k < m[i]; ++k) r *= static_cast<unsigned long>(i);
        r *= factorial(static_cast<unsigned>(m[i]));
    }
    return r;
}

std::pair<Integer, Integer> aut_and_z(const Partition& p) { return {aut_order(p), z_order(p)}; }

Integer class_size(const Partition& p) {
    Integer f = factorial(static_cast<unsigned>(p.weight()));
    Integer z = z_order(p);
    return f / z;
}

Integer part_product(const Partition& p) {
    Integer r = 1;
    for (int x : p.parts()) r *= x;
    return r;
}

std::vector<int> contents(const Partition& p) {
    std::vector<int> c;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[i]; ++j) c.push_back(j - i);
    return c;
}

GenusInfo genus_of(const Partition& mu, const Partition& nu, int d) {
    if (mu.weight() != nu.weight()) throw DomainError("genus_of needs profiles of equal weight");
    Rational g(Integer(2 - mu.length() - nu.length() + d), Integer(2));
    return {g, g.is_integer() && g.sign() >= 0};
}

std::pair<std::vector<int>, std::vector<int>> frobenius(const Partition& p) {
    Partition c = p.conjugate();
    std::vector<int> a, b;
    for (int i = 0; i < p.length() && p[i] > i; ++i) {
        a.push_back(p[i] - i - 1);
        b.push_back(c[i] - i - 1);
    }
    return {a, b};
}

}  // namespace hwtau
