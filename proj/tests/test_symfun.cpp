#include "doctest.h"

#include "hwtau/errors.hpp"
#include "hwtau/symfun.hpp"

#include <functional>
#include <map>

using namespace hwtau;

namespace {

using Poly = std::map<std::vector<int>, long long>;

// Frobenius formula: chi^lambda(mu) = [x^{lambda + delta}] Delta(x) p_mu(x) in l(lambda) variables.
long long frobenius_character(const Partition& lambda, const Partition& mu) {
    const int n = std::max(lambda.length(), 1);
    Poly p{{std::vector<int>(static_cast<size_t>(n), 0), 1}};
    auto mul = [&](const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                auto e = ea;
                for (int i = 0; i < n; ++i) e[i] += eb[i];
                r[e] += ca * cb;
            }
        return r;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Poly f;
            std::vector<int> ei(static_cast<size_t>(n), 0), ej(static_cast<size_t>(n), 0);
            ei[i] = 1;
            ej[j] = 1;
            f[ei] += 1;
            f[ej] -= 1;
            p = mul(p, f);
        }
    for (int k : mu.parts()) {
        Poly f;
        for (int i = 0; i < n; ++i) {
            std::vector<int> e(static_cast<size_t>(n), 0);
            e[i] = k;
            f[e] += 1;
        }
        p = mul(p, f);
    }
    std::vector<int> target(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) target[i] = (i < lambda.length() ? lambda[i] : 0) + n - 1 - i;
    auto it = p.find(target);
    return it == p.end() ? 0 : it->second;
}

// Number of 0-1 matrices with row sums a and column sums b.
long long zero_one_matrices(const std::vector<int>& rows, const std::vector<int>& cols) {
    std::function<long long(size_t, std::vector<int>)> rec = [&](size_t r, std::vector<int> left) -> long long {
        if (r == rows.size()) {
            for (int v : left)
                if (v != 0) return 0;
            return 1;
        }
        long long total = 0;
        const int m = static_cast<int>(cols.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            if (__builtin_popcount(static_cast<unsigned>(mask)) != rows[r]) continue;
            bool ok = true;
            auto next = left;
            for (int j = 0; j < m; ++j)
                if (mask & (1 << j)) {
                    if (--next[j] < 0) ok = false;
                }
            if (ok) total += rec(r + 1, next);
        }
        return total;
    };
    return rec(0, cols);
}

const std::vector<Rational> sample_c{Rational(1), Rational(1, 2), Rational(-2, 3)};

}  // namespace

TEST_CASE("character table values") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : enumerate_partitions(n)) {
            CHECK(character(Partition{n}, mu) == 1);
            CHECK(character(Partition::ones(n), mu) == (colength(mu) % 2 == 0 ? 1 : -1));
        }
    CHECK(character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(character(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(character(Partition{2, 1}, Partition{3}) == -1);
}

TEST_CASE("Murnaghan-Nakayama agrees with the Frobenius formula") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            for (const auto& mu : enumerate_partitions(n))
                CHECK(character(lambda, mu) == frobenius_character(lambda, mu));
}

TEST_CASE("orthogonality") {
    for (int n = 1; n <= 8; ++n) {
        const auto t = char_table(n);
        const auto& ps = t->partitions();
        for (size_t a = 0; a < ps.size(); ++a)
            for (size_t b = 0; b < ps.size(); ++b) {
                Integer col = 0;
                Rational row(0);
                for (size_t l = 0; l < ps.size(); ++l) {
                    col += Integer(static_cast<long>(t->value(l, a) * t->value(l, b)));
                    row += Rational(t->value(a, l) * t->value(b, l)) / Rational(z_order(ps[l]));
                }
                CHECK(col == (a == b ? z_order(ps[a]) : Integer(0)));
                CHECK(row == Rational(a == b ? 1 : 0));
            }
    }
}

TEST_CASE("character cap") {
    CHECK(char_table_cap() == 10);
    set_char_table_cap(4);
    CHECK_THROWS_AS(char_table(5), ResourceError);
    set_char_table_cap(10);
    CHECK(char_table(5)->partitions().size() == 7);
}

TEST_CASE("Schur to power sums") {
    const auto s1 = schur_poly(Partition{1}, Alphabet::T, 3, 0);
    CHECK(s1.coeff({1}, {}, 0)[0] == Rational(1));
    const auto s2 = schur_poly(Partition{2}, Alphabet::T, 3, 0);
    CHECK(s2.coeff({2}, {}, 0)[0] == Rational(1, 2));
    CHECK(s2.coeff({0, 1}, {}, 0)[0] == Rational(1));
    const auto s11 = schur_poly(Partition{1, 1}, Alphabet::T, 3, 0);
    CHECK(s11.coeff({2}, {}, 0)[0] == Rational(1, 2));
    CHECK(s11.coeff({0, 1}, {}, 0)[0] == Rational(-1));
    const auto s11s = schur_poly(Partition{1, 1}, Alphabet::S, 3, 0);
    CHECK(s11s.coeff({}, {0, 1}, 0)[0] == Rational(-1));
    const auto c = schur_to_power(Partition{2});
    CHECK(c.at(Partition{1, 1}) == Rational(1, 2));
    CHECK(c.at(Partition{2}) == Rational(1, 2));
}

TEST_CASE("Cauchy identity through weight 6") {
    const int w = 6;
    GradedPoly lhs(w, 0);
    for (int n = 0; n <= w; ++n)
        for (const auto& l : enumerate_partitions(n)) {
            auto prod = schur_poly(l, Alphabet::T, w, 0) * schur_poly(l, Alphabet::S, w, 0);
            lhs += prod;
        }
    GradedPoly arg(w, 0);
    for (int k = 1; k <= w; ++k) {
        ExpVec e(static_cast<size_t>(k), 0);
        e[k - 1] = 1;
        arg.add_term(make_monomial(e, e, 0), Rational(k));
    }
    CHECK(lhs == exp(arg));
}

TEST_CASE("basis evaluations") {
    CHECK(eval_basis(Basis::m, Partition{2}, {Rational(1), Rational(1)}) == Rational(2));
    CHECK(eval_basis(Basis::e, Partition{2}, {Rational(1), Rational(1)}) == Rational(1));
    CHECK(eval_basis(Basis::h, Partition{2}, {Rational(1), Rational(1)}) == Rational(3));
    CHECK(eval_basis(Basis::f, Partition{2}, {Rational(1)}) == Rational(-1));
    CHECK(eval_basis(Basis::p, Partition{2, 1}, {Rational(1), Rational(2)}) == Rational(15));
    CHECK(eval_basis(Basis::m, Partition{}, sample_c) == Rational(1));
    CHECK(eval_basis(Basis::m, Partition{1, 1, 1, 1}, sample_c) == Rational(0));
}

TEST_CASE("m and f bases through 0-1 matrix expansions") {
    // e_mu = sum_lambda M_{mu lambda} m_lambda and, applying omega, h_mu = sum_lambda M_{mu lambda} f_lambda.
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : enumerate_partitions(n)) {
            Rational e_sum(0), h_sum(0);
            for (const auto& lambda : enumerate_partitions(n)) {
                const long long M = zero_one_matrices(mu.parts(), lambda.parts());
                if (M == 0) continue;
                e_sum += Rational(M) * eval_basis(Basis::m, lambda, sample_c);
                h_sum += Rational(M) * eval_basis(Basis::f, lambda, sample_c);
            }
            CHECK(e_sum == eval_basis(Basis::e, mu, sample_c));
            CHECK(h_sum == eval_basis(Basis::h, mu, sample_c));
        }
}

TEST_CASE("complete polynomials of the rescaled alphabet") {
    CHECK(h_poly(0, 1, Rational(3), {Rational(5)}) == Rational(1));
    CHECK(h_poly(1, 1, Rational(1), {Rational(7)}) == Rational(7));
    CHECK(h_poly(1, -1, Rational(1), {Rational(7)}) == Rational(-7));
    CHECK(h_poly(2, 1, Rational(1), {Rational(3)}) == Rational(9, 2));
    CHECK(h_poly(-1, 1, Rational(1), {Rational(3)}) == Rational(0));
    CHECK_THROWS_AS(h_poly(2, 1, Rational(0), {Rational(3)}), DomainError);
    const std::vector<Rational> s{Rational(1, 2), Rational(-1), Rational(2, 3)};
    const Rational beta(2, 5);
    // oracle: the z-series exp(sum s_k z^k / beta), using BetaSeries as the series ring
    BetaSeries arg(8);
    for (int k = 1; k <= 3; ++k) arg.set(k, s[k - 1] / beta);
    const BetaSeries gen = exp(arg), gen_minus = exp(-arg);
    for (int n = 0; n <= 8; ++n) {
        CHECK(h_poly(n, 1, beta, s) == gen[n]);
        CHECK(h_poly(n, -1, beta, s) == gen_minus[n]);
    }
    for (int N = 1; N <= 8; ++N) {
        Rational acc(0);
        for (int n = 0; n <= N; ++n) acc += h_poly(n, 1, beta, s) * h_poly(N - n, -1, beta, s);
        CHECK(acc == Rational(0));
    }
}
