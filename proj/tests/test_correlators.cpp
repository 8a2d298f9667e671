#include "doctest.h"

#include "hwtau/correlators.hpp"
#include "hwtau/errors.hpp"

using namespace hwtau;

namespace {

EvalPoint at(Rational beta, Rational gamma = Rational(1)) { return EvalPoint{beta, gamma, std::nullopt}; }

void require_ok(const CheckReport& r) {
    INFO(r.summary());
    INFO(r.first_failure());
    CHECK(r.ok());
}

struct KernelCase {
    const char* name;
    WeightFamily f;
    EvalPoint pt;
    std::vector<Rational> s;
};

std::vector<KernelCase> kernel_cases() {
    EvalPoint exp_pt = at(Rational(1, 2), Rational(2, 3));
    exp_pt.exp_beta = Rational(3, 2);
    return {
        {"exponential", WeightFamily::exponential(), exp_pt, {Rational(1), Rational(1, 2)}},
        {"belyi beta=2/5", WeightFamily::belyi(), at(Rational(2, 5), Rational(3, 4)), {Rational(1), Rational(1, 2)}},
        {"c=(1,1/2) beta=2/7", WeightFamily::finite({Rational(1), Rational(1, 2)}), at(Rational(2, 7), Rational(5, 3)),
         {Rational(1), Rational(-1, 3)}},
        {"dual c=(1/2) beta=1/5", WeightFamily::dual({Rational(1, 2)}), at(Rational(1, 5)), {Rational(1)}},
    };
}

}  // namespace

TEST_CASE("K2 from tau agrees with the basis series on 6x6 windows") {
    for (const auto& kc : kernel_cases()) {
        INFO(kc.name);
        const auto tau = evaluate_tau(kc.f, kc.pt, kc.s, 7);
        const auto b = build_basis(kc.f, kc.pt, kc.s, -5, 6, 8);
        const auto kt = K2_via_tau(tau, -6, -1, -2, 3);
        const auto kb = K2_via_basis(b, -6, -1, -2, 3);
        std::string why;
        const bool eq = kernel_equal(kt, kb, &why);
        INFO(why);
        CHECK(eq);
        CHECK(kt.cells.size() == 36);
        CHECK(kb.j_cutoff.at({-6, -2}) == 6);
        CHECK(kb.j_cutoff.at({-1, 3}) == 3);  // empty range: j from 4 to 1
        CHECK(kt.at(-1, 3) == 0);
    }
}

TEST_CASE("K2 of the trivial tau is the Cauchy kernel") {
    const auto tau = evaluate_tau(WeightFamily::trivial(), at(Rational(1), Rational(7, 2)), {}, 4);
    const auto kt = K2_via_tau(tau, -4, -1, 0, 3);
    for (int ez = -4; ez <= -1; ++ez)
        for (int ew = 0; ew <= 3; ++ew) CHECK(kt.at(ez, ew) == Rational(ew == -ez - 1 ? 1 : 0));
}

TEST_CASE("kernel windows refuse cells they cannot determine") {
    const auto f = WeightFamily::belyi();
    const auto pt = at(Rational(2, 5));
    const auto tau = evaluate_tau(f, pt, {Rational(1)}, 2);
    CHECK_THROWS_AS(K2_via_tau(tau, -4, -1, 0, 1), OutOfWindowError);
    const auto b = build_basis(f, pt, {Rational(1)}, -2, 3, 6);
    CHECK_THROWS_AS(K2_via_basis(b, -4, -1, 0, 1), OutOfWindowError);
    CHECK_NOTHROW(K2_via_basis(b, -3, -1, 0, 1));
}

TEST_CASE("CD matrix") {
    SUBCASE("A_11 vanishes for Belyi at beta = 1") {
        const auto m = cd_matrix(WeightFamily::belyi(), at(Rational(1)), {Rational(3, 4)}, 3);
        CHECK(m.A[1][1] == 0);
        CHECK(m.A[0][0] == 1);
        CHECK(m.forms_agree());
    }
    SUBCASE("both forms agree for non-polynomial families") {
        EvalPoint pt = at(Rational(1, 3));
        pt.exp_beta = Rational(5, 4);
        CHECK(cd_matrix(WeightFamily::exponential(), pt, {Rational(1), Rational(2)}, 5).forms_agree());
        CHECK(cd_matrix(WeightFamily::dual({Rational(1, 3)}), at(Rational(1, 2)), {Rational(1)}, 5).forms_agree());
    }
    SUBCASE("finite rank for L, M in {1, 2}") {
        const std::vector<WeightFamily> fams = {WeightFamily::belyi(),
                                                WeightFamily::finite({Rational(1), Rational(1, 2)})};
        const std::vector<std::vector<Rational>> ss = {{Rational(2, 3)}, {Rational(1), Rational(-1, 2)}};
        for (const auto& f : fams)
            for (const auto& s : ss)
                for (const auto& beta : {Rational(1), Rational(2, 7)}) {
                    const auto rep = cd_finiteness(f, at(beta), s, 3);
                    require_ok(rep);
                    const int LM = f.degree() * static_cast<int>(s.size());
                    const auto m = cd_matrix(f, at(beta), s, LM);
                    bool some_nonzero = false;
                    for (int i = 1; i <= LM; ++i)
                        for (int j = 1; i + j <= LM; ++j) some_nonzero = some_nonzero || m.A[i][j] != 0;
                    if (LM >= 2) CHECK(some_nonzero);
                }
    }
    SUBCASE("finite rank needs a polynomial family") {
        CHECK_THROWS_AS(cd_finiteness(WeightFamily::signed_hurwitz(), at(Rational(1, 2)), {Rational(1)}),
                        ConfigError);
    }
}

TEST_CASE("CD kernel against tau") {
    struct Case {
        WeightFamily f;
        EvalPoint pt;
        std::vector<Rational> s;
    };
    const std::vector<Case> cases = {
        {WeightFamily::belyi(), at(Rational(2, 5), Rational(3, 4)), {Rational(1), Rational(1, 2)}},
        {WeightFamily::belyi(), at(Rational(1)), {Rational(1)}},
        {WeightFamily::finite({Rational(1), Rational(1, 2)}), at(Rational(2, 7), Rational(5, 3)),
         {Rational(1), Rational(-1, 3)}},
        {WeightFamily::finite({Rational(1), Rational(1, 2)}), at(Rational(1, 3)), {Rational(1)}},
    };
    for (const auto& c : cases) {
        INFO(c.f.describe());
        const int LM = c.f.degree() * static_cast<int>(c.s.size());
        const auto tau = evaluate_tau(c.f, c.pt, c.s, 7);
        const auto b = build_basis(c.f, c.pt, c.s, 1 - LM, 1, 10);
        const auto res = cd_kernel(b, tau, -2, 3, 3);
        require_ok(res.report);
        CHECK(res.kernel_x.cells.size() == 24);
    }
}

TEST_CASE("CD numerator needs the Q~+_{01} = gamma prefactor") {
    // G = 1, s = 0: (z-w) K2 = 1 while w_1(z) w*_1(w) = 1/gamma.
    const auto pt = at(Rational(1), Rational(5, 2));
    const auto b = build_basis(WeightFamily::trivial(), pt, {}, 0, 1, 3);
    CHECK(b.wk(1).at(0) * b.wk_dual(1).at(0) == Rational(2, 5));
    require_ok(q_tilde_prefactor_check(b));
    const auto b2 = build_basis(WeightFamily::finite({Rational(1), Rational(1, 2)}), at(Rational(2, 7), Rational(5, 3)),
                                {Rational(1)}, -3, 3, 6);
    require_ok(q_tilde_prefactor_check(b2));
}

TEST_CASE("generating function of A") {
    const std::vector<std::pair<WeightFamily, std::vector<Rational>>> cases = {
        {WeightFamily::belyi(), {Rational(1)}},
        {WeightFamily::belyi(), {Rational(1), Rational(1, 2)}},
        {WeightFamily::finite({Rational(1), Rational(1, 2)}), {Rational(2, 3)}},
        {WeightFamily::finite({Rational(1), Rational(1, 2)}), {Rational(1), Rational(-1, 3)}},
    };
    for (const auto& [f, s] : cases)
        for (const auto& beta : {Rational(1), Rational(2, 5)}) {
            const auto g = gen_A(f, at(beta), s, 8);
            require_ok(g.report);
            CHECK(g.coeffs.at({0, 0}) == 1);
            const int LM = f.degree() * static_cast<int>(s.size());
            for (const auto& [key, v] : g.coeffs) CHECK(key.first + key.second <= LM);
        }
    CHECK_THROWS_AS(gen_A(WeightFamily::exponential(), at(Rational(1)), {Rational(1)}, 4), ConfigError);
}

TEST_CASE("h orthogonality") {
    for (const auto& s : std::vector<std::vector<Rational>>{{Rational(3, 2)}, {Rational(1), Rational(-2, 5)}}) {
        const auto r = h_orthogonality(s, 3, 12);
        require_ok(r.report);
        CHECK(r.nonzero_below_bound > 0);
        CHECK(r.values.at({0, 0}) == 1);
    }
}

TEST_CASE("multipair n = 2") {
    EvalPoint exp_pt = at(Rational(1, 2), Rational(2, 3));
    exp_pt.exp_beta = Rational(3, 2);
    const std::vector<KernelCase> cases = {
        {"belyi", WeightFamily::belyi(), at(Rational(1)), {Rational(1), Rational(1, 2)}},
        {"c=(1,1/2)", WeightFamily::finite({Rational(1), Rational(1, 2)}), at(Rational(1, 3), Rational(2)),
         {Rational(1)}},
        {"exponential", WeightFamily::exponential(), exp_pt, {Rational(1)}},
    };
    for (const auto& kc : cases) {
        INFO(kc.name);
        const auto tau = evaluate_tau(kc.f, kc.pt, kc.s, 6);
        require_ok(multipair_check(tau, -4, -2, 3));
    }
}

TEST_CASE("correlator checks detect a corrupted basis or tau") {
    const auto f = WeightFamily::finite({Rational(1), Rational(1, 2)});
    const auto pt = at(Rational(2, 7), Rational(5, 3));
    const std::vector<Rational> s = {Rational(1), Rational(-1, 3)};
    const auto tau = evaluate_tau(f, pt, s, 7);
    const auto bad = build_basis_corrupted(f, pt, s, -3, 1, 10, -2, Rational(3, 2));
    CHECK_FALSE(cd_kernel(bad, tau, -2, 3, 3).report.ok());

    auto tau_bad = tau;
    // the first bilinear relation sits at weight 4; lower perturbations are invisible
    tau_bad.coeffs[ExpVec{0, 2}] += Rational(1, 7);
    CHECK_FALSE(multipair_check(tau_bad, -4, -2, 3).ok());
    const auto good = build_basis(f, pt, s, -5, 6, 8);
    std::string why;
    CHECK_FALSE(kernel_equal(K2_via_tau(tau_bad, -6, -1, -2, 3), K2_via_basis(good, -6, -1, -2, 3), &why));
}
