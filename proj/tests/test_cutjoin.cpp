#include "doctest.h"

#include "hwtau/cutjoin.hpp"
#include "hwtau/errors.hpp"

using namespace hwtau;

namespace {

void require_ok(const CheckReport& r) {
    INFO(r.summary());
    INFO(r.first_failure());
    CHECK(r.ok());
}

}  // namespace

TEST_CASE("explicit operators on small inputs") {
    const auto Q0 = build_Qk(0, 6);
    CHECK(Q0.apply(TPoly{{{0, 0, 1}, Rational(1)}}) == TPoly{{{0, 0, 1}, Rational(3)}});

    const auto Q1 = build_Qk(1, 6);
    CHECK(Q1.apply(TPoly{{{2}, Rational(1)}}) == TPoly{{{0, 1}, Rational(2)}});
    CHECK(Q1.apply(TPoly{{{0, 1}, Rational(1)}}) == TPoly{{{2}, Rational(1, 2)}});

    const auto Q2 = build_Qk(2, 6);
    CHECK(Q2.apply(TPoly{{{1}, Rational(1)}}).empty());
    CHECK_THROWS_AS(build_Qk(3, 6), ConfigError);

    // [Q_1, Q_2] t_1^3 = 0
    const TPoly t13{{{3}, Rational(1)}};
    TPoly c = Q1.apply(Q2.apply(t13));
    for (const auto& [e, v] : Q2.apply(Q1.apply(t13))) c[e] -= v;
    for (const auto& [e, v] : c) CHECK(v == 0);

    // weight preservation
    for (const auto& term : Q2.terms) CHECK(weight(term.mult) == weight(term.deriv));
    for (const auto& term : build_Vk(2, 6).terms) CHECK(weight(term.mult) == weight(term.deriv) + 1);
}

TEST_CASE("diagonal eigenvalues") {
    CHECK(diagonal_Qk(0, Partition{3, 1}) == 4);
    CHECK(diagonal_Qk(1, Partition{2}) == 1);
    CHECK(diagonal_Qk(1, Partition{1, 1}) == -1);
    CHECK(diagonal_Qk(2, Partition{2, 1}) == 2);
    CHECK(diagonal_Qk(3, Partition{3}) == 9);
}

TEST_CASE("Schur functions are eigenvectors and the operators commute") {
    const auto rep = schur_eigen_check(2, 6, 8);
    require_ok(rep);
    CHECK(rep.results.size() > 100);
    const TPoly s2 = schur_t(Partition{2});
    CHECK(build_Qk(1, 2).apply(s2) == s2);
}

TEST_CASE("tau reconstruction") {
    SUBCASE("G = 1 gives exp(sum k t_k s_k)") {
        const auto r = reconstruct_tau(WeightFamily::trivial(), 4, 3, 3);
        require_ok(r.report);
        for (const auto& [m, c] : r.tau.terms()) CHECK(c.order() == 0);
    }
    SUBCASE("FiniteC families through (5, 4)") {
        for (const auto& f : {WeightFamily::belyi(), WeightFamily::finite({Rational(1), Rational(1, 2)}),
                              WeightFamily::finite({Rational(2), Rational(-1, 3), Rational(1, 5)})}) {
            INFO(f.describe());
            require_ok(reconstruct_tau(f, 5, 4, 4).report);
        }
    }
    SUBCASE("dual family") { require_ok(reconstruct_tau(WeightFamily::dual({Rational(1, 2)}), 4, 4, 4).report); }
    SUBCASE("k_cut below d_max is rejected") {
        CHECK_THROWS_AS(reconstruct_tau(WeightFamily::belyi(), 3, 3, 2), ConfigError);
    }
    SUBCASE("truncating k too early is visible") {
        const auto f = WeightFamily::finite({Rational(1), Rational(1, 2)});
        const auto tau = build_tau(f, 4, 4);
        CHECK_FALSE(reconstruct_tau_diagonal(f, 4, 4, 2) == tau.body);
    }
}

TEST_CASE("Exponential index question") {
    const auto r = resolve_exp_index(5, 4);
    require_ok(r.report);
    CHECK(r.resolved == 1);
    CHECK(r.holds.at(1));
    CHECK_FALSE(r.holds.at(2));
}

TEST_CASE("cut-and-join PDEs") {
    require_ok(pde_check(WeightFamily::finite({Rational(1), Rational(1, 2)}), 5, 4));
    require_ok(pde_check(WeightFamily::belyi(), 4, 3));
    require_ok(pde_check(WeightFamily::exponential(), 4, 3));
    require_ok(pde_check(WeightFamily::dual({Rational(1)}), 4, 3));
}

TEST_CASE("V_k single Hurwitz representation") {
    for (const auto& f : {WeightFamily::trivial(), WeightFamily::belyi(), WeightFamily::finite({Rational(1, 3)}),
                          WeightFamily::finite({Rational(1), Rational(1, 2)}),
                          WeightFamily::finite({Rational(2), Rational(-3)})}) {
        INFO(f.describe());
        const auto rep = single_rep_check(f, 4, 4);
        require_ok(rep);
    }
    CHECK_THROWS_AS(single_rep_check(WeightFamily::finite({Rational(1), Rational(1), Rational(1)}), 3, 3),
                    ConfigError);
    CHECK_THROWS_AS(single_rep_check(WeightFamily::exponential(), 3, 3), ConfigError);
}
