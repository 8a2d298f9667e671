#include "doctest.h"

#include "hwtau/errors.hpp"
#include "hwtau/group_oracle.hpp"
#include "hwtau/hurwitz.hpp"
#include "hwtau/symfun.hpp"

#include <cstdlib>

using namespace hwtau;

namespace {

std::vector<WeightFamily> route_families() {
    return {WeightFamily::belyi(), WeightFamily::finite({Rational(1), Rational(1, 2)}),
            WeightFamily::signed_hurwitz(), WeightFamily::exponential(), WeightFamily::quantum(Rational(1, 2))};
}

const Partition two{2};
const Partition one_one{1, 1};

}  // namespace

TEST_CASE("three routes agree for N <= 4, d <= 3") {
    for (const auto& f : route_families()) {
        const auto rep = verify_routes(f, 4, 3);
        for (const auto& m : rep.mismatches) MESSAGE(m);
        CHECK(rep.ok());
        // 1 + 4 + 9 + 25 pairs, four values of d each
        CHECK(rep.checked == 39 * 4);
    }
}

TEST_CASE("degree zero is delta over z") {
    for (const auto& f : route_families())
        for (int n = 1; n <= 5; ++n)
            for (const auto& mu : enumerate_partitions(n))
                for (const auto& nu : enumerate_partitions(n)) {
                    const Rational want = mu == nu ? Rational(Integer(1), z_order(mu)) : Rational(0);
                    CHECK(H_via_characters(f, mu, nu, 0)[0] == want);
                }
}

TEST_CASE("exponential benchmark values") {
    const auto f = WeightFamily::exponential();
    const BetaSeries h = H_via_characters(f, two, one_one, 4);
    CHECK(h[0] == Rational(0));
    CHECK(h[1] == Rational(1, 2));
    CHECK(h[2] == Rational(0));
    CHECK(h[3] == Rational(1, 12));
    // (e^b - e^{-b})/4 has no even part
    CHECK(h[4] == Rational(0));
    // brute force: one transposition and the (2) profile
    CHECK(factorization_count(2, {two, two, one_one}) == Rational(1, 2));
    CHECK(H_via_profiles(f, two, one_one, 1) == Rational(1, 2));
    CHECK(H_via_paths(f, two, one_one, 3) == Rational(1, 12));
}

TEST_CASE("belyi benchmark values") {
    const auto f = WeightFamily::belyi();
    const BetaSeries h = H_via_characters(f, two, one_one, 5);
    CHECK(h[1] == Rational(1, 2));
    for (int d = 2; d <= 5; ++d) CHECK(h[d] == Rational(0));
    CHECK(H_via_paths(f, two, one_one, 1) == Rational(1, 2));
    CHECK(H_via_profiles(f, two, one_one, 2) == Rational(0));
}

TEST_CASE("single colength-one profile at d = 1") {
    const auto f = WeightFamily::finite({Rational(2), Rational(3)});
    for (int n = 2; n <= 4; ++n) {
        std::vector<int> tp(static_cast<size_t>(n - 1), 1);
        tp[0] = 2;
        const Partition t(tp);
        for (const auto& mu : enumerate_partitions(n))
            for (const auto& nu : enumerate_partitions(n))
                CHECK(H_via_profiles(f, mu, nu, 1) == g_coeff(f, 1) * factorization_count(n, {t, mu, nu}));
    }
}

TEST_CASE("weight mismatch gives zero") {
    const auto f = WeightFamily::exponential();
    CHECK(H_via_characters(f, Partition{2}, Partition{1}, 3).is_zero());
    CHECK(H_via_profiles(f, Partition{2}, Partition{1}, 1) == Rational(0));
    CHECK(H_via_paths(f, Partition{2}, Partition{1}, 1) == Rational(0));
    const auto t = hurwitz_table(f, 2, 2);
    CHECK(t.H(Partition{2}, Partition{3}, 1) == Rational(0));
}

TEST_CASE("symmetry in mu and nu") {
    for (const auto& f : route_families())
        for (int n = 1; n <= 5; ++n)
            for (const auto& mu : enumerate_partitions(n))
                for (const auto& nu : enumerate_partitions(n))
                    CHECK(H_via_characters(f, mu, nu, 4) == H_via_characters(f, nu, mu, 4));
}

TEST_CASE("connected numbers from log tau match the transitivity oracle") {
    for (const auto& f : route_families())
        for (int n = 1; n <= 3; ++n) {
            const auto t = H_connected(f, n, 3);
            CHECK(t.route == Route::log);
            for (const auto& mu : enumerate_partitions(n))
                for (const auto& nu : enumerate_partitions(n))
                    for (int d = 0; d <= 3; ++d) {
                        const Rational want = H_connected_oracle(f, mu, nu, d);
                        CHECK_MESSAGE(t.H_connected(mu, nu, d) == want,
                                      f.label << " " << mu.str() << " " << nu.str() << " d=" << d);
                    }
        }
}

TEST_CASE("connected numbers vanish on inadmissible genus") {
    for (const auto& f : route_families()) {
        const auto t = H_connected(f, 5, 4);
        for (const auto& [key, v] : t.connected) {
            const auto& [mu, nu, d] = key;
            CHECK(genus_of(mu, nu, d).admissible);
            CHECK(!v.is_zero());
        }
    }
}

TEST_CASE("single sheet is always connected") {
    const auto f = WeightFamily::exponential();
    const auto c = H_connected(f, 1, 4);
    const auto a = hurwitz_table(f, 1, 4);
    for (int d = 0; d <= 4; ++d) CHECK(c.H_connected(Partition{1}, Partition{1}, d) == a.H(Partition{1}, Partition{1}, d));
}

TEST_CASE("exponential two-sheet cover with a (2) point is connected") {
    const auto c = H_connected(WeightFamily::exponential(), 2, 3);
    CHECK(c.H_connected(two, one_one, 1) == Rational(1, 2));
    CHECK(H_connected_oracle(WeightFamily::exponential(), two, one_one, 1) == Rational(1, 2));
}

TEST_CASE("table with connected part and out-of-window lookups") {
    const auto t = hurwitz_table(WeightFamily::belyi(), 3, 2, true);
    CHECK(t.H(Partition{3}, Partition{1, 1, 1}, 2) == H_via_characters(WeightFamily::belyi(), Partition{3}, Partition{1, 1, 1}, 2)[2]);
    CHECK_THROWS_AS(t.H(Partition{3}, Partition{3}, 3), OutOfWindowError);
    CHECK(!t.connected.empty());
    CHECK_THROWS_AS(connected_from_log(GradedPoly(2, 2), 3, 2), OutOfWindowError);
}

TEST_CASE("threaded table matches the serial one") {
    const auto f = WeightFamily::finite({Rational(1), Rational(1, 2)});
    const auto serial = hurwitz_table(f, 5, 3);
    setenv("HURWITZ_TAU_THREADS", "3", 1);
    const auto threaded = hurwitz_table(f, 5, 3);
    unsetenv("HURWITZ_TAU_THREADS");
    CHECK(serial.entries == threaded.entries);
}

TEST_CASE("rational values for rational weights") {
    const auto t = hurwitz_table(WeightFamily::finite({Rational(1, 3), Rational(-2, 5)}), 4, 3);
    for (const auto& [k, v] : t.entries) CHECK(v.den() > 0);
    CHECK(!t.entries.empty());
}
