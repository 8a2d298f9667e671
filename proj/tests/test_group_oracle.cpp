#include "doctest.h"

#include "hwtau/errors.hpp"
#include "hwtau/group_oracle.hpp"
#include "hwtau/symfun.hpp"

#include <random>

using namespace hwtau;

TEST_CASE("class algebra structure") {
    const auto a2 = build_class_algebra(2);
    const size_t t = a2->index(Partition{2}), id = a2->identity_index();
    CHECK(a2->structure(t, t, id) == 1);
    CHECK(a2->structure(t, t, t) == 0);
    const auto a3 = build_class_algebra(3);
    const size_t tr = a3->index(Partition{2, 1});
    CHECK(a3->structure(tr, tr, a3->identity_index()) == 3);
    CHECK(a3->structure(tr, tr, a3->index(Partition{3})) == 3);
    CHECK(a3->structure(tr, tr, tr) == 0);
    for (int n = 1; n <= 5; ++n) {
        const auto a = build_class_algebra(n);
        const size_t k = a->classes().size();
        Integer total = 0;
        for (const auto& s : a->sizes()) total += s;
        CHECK(total == factorial(static_cast<unsigned>(n)));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) {
                CHECK(a->structure(a->identity_index(), i, j) == (i == j ? 1 : 0));
                for (size_t l = 0; l < k; ++l) {
                    CHECK(a->structure(i, j, l) == a->structure(j, i, l));
                    CHECK(a->structure(i, j, l) >= 0);
                }
            }
        // associativity on class sums
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) {
                std::vector<Integer> x(k, Integer(0));
                x[a->identity_index()] = 1;
                const auto left = a->multiply(a->multiply(x, i), j);
                const auto right = a->multiply(a->multiply(x, j), i);
                CHECK(left == right);
            }
    }
    CHECK_THROWS_AS(build_class_algebra(8), ResourceError);
}

TEST_CASE("factorization counts") {
    CHECK(factorization_count(2, {Partition{2}, Partition{2}}) == Rational(1, 2));
    CHECK(factorization_count(3, {Partition{2}, Partition{2}}) == Rational(0));
    for (int n = 1; n <= 5; ++n) CHECK(factorization_count(n, {Partition::ones(n)}) == Rational(Integer(1), factorial(n)));
    CHECK(factorization_count(0, {}) == Rational(1));
}

TEST_CASE("class algebra counts agree with direct enumeration") {
    std::mt19937 rng(11);
    for (int n = 1; n <= 4; ++n) {
        const auto ps = enumerate_partitions(n);
        std::uniform_int_distribution<size_t> pick(0, ps.size() - 1);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Partition> prof;
            const int k = 2 + trial % 4;
            for (int i = 0; i < k; ++i) prof.push_back(ps[pick(rng)]);
            CHECK(factorization_count(n, prof) == factorization_count_direct(n, prof));
        }
    }
}

TEST_CASE("direct enumeration respects the budget") {
    CHECK_THROWS_AS(factorization_count_direct(5, {Partition{2, 1, 1, 1}, Partition{2, 1, 1, 1}, Partition{2, 1, 1, 1},
                                                   Partition{2, 1, 1, 1}},
                                               100),
                    ResourceError);
}

TEST_CASE("transitive counts") {
    CHECK(transitive_factorization_count(2, {Partition{2}, Partition{2}}) == Rational(1, 2));
    CHECK(transitive_factorization_count(2, {Partition{1, 1}, Partition{1, 1}}) == Rational(0));
    CHECK(transitive_factorization_count(1, {Partition{1}, Partition{1}}) == Rational(1));
    std::mt19937 rng(5);
    for (int n = 1; n <= 4; ++n) {
        const auto ps = enumerate_partitions(n);
        std::uniform_int_distribution<size_t> pick(0, ps.size() - 1);
        for (int trial = 0; trial < 15; ++trial) {
            std::vector<Partition> prof;
            for (int i = 0; i < 3; ++i) prof.push_back(ps[pick(rng)]);
            const Rational tc = transitive_factorization_count(n, prof);
            CHECK(tc <= factorization_count(n, prof));
            if (n == 1) CHECK(tc == factorization_count(n, prof));
        }
    }
    // three transpositions in S_3 with product a 3-cycle generate S_3
    CHECK(transitive_factorization_count(3, {Partition{2, 1}, Partition{2, 1}, Partition{3}}) ==
          factorization_count(3, {Partition{2, 1}, Partition{2, 1}, Partition{3}}));
}

TEST_CASE("monotone paths") {
    CHECK(monotone_path_count(2, Partition{1}, Partition{2}, Partition{1, 1}) == 1);
    CHECK(monotone_path_count(2, Partition{2}, Partition{1, 1}, Partition{1, 1}) == 1);
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : enumerate_partitions(n))
            for (const auto& nu : enumerate_partitions(n)) {
                const Integer want = mu == nu ? class_size(nu) : Integer(0);
                CHECK(monotone_path_count(n, Partition{}, mu, nu) == want);
            }
    // calibration: (1/N!) * count at d = 0 equals delta / z
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : enumerate_partitions(n))
            CHECK(Rational(monotone_path_count(n, Partition{}, mu, mu)) / Rational(factorial(n)) ==
                  Rational(Integer(1), z_order(mu)));
    // d = 1 from the identity: the N(N-1)/2 single transpositions
    CHECK(monotone_path_count(4, Partition{1}, Partition{2, 1, 1}, Partition{1, 1, 1, 1}) == 6);
    // signature (2) in S_3: (a,b),(a',b) with equal b; b = 2: 1 + b = 3: 4
    Integer total = 0;
    for (const auto& mu : enumerate_partitions(3)) total += monotone_path_count(3, Partition{2}, mu, Partition{1, 1, 1});
    CHECK(total == 5);
}

TEST_CASE("permutation helpers") {
    const Perm p{1, 2, 0}, q{1, 0, 2};
    CHECK(compose(p, inverse(p)) == identity_perm(3));
    CHECK(cycle_type(p) == Partition{3});
    CHECK(cycle_type(compose(p, q)) == Partition{2, 1});
    CHECK(all_perms(4).size() == 24);
}
