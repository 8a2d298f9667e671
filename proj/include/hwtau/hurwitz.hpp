#pragma once

#include "hwtau/graded_poly.hpp"
#include "hwtau/partitions.hpp"
#include "hwtau/weights.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace hwtau {

enum class Route { characters, profiles, paths, log };
std::string route_name(Route r);

using HurwitzKey = std::tuple<Partition, Partition, int>;  // (mu, nu, d)

struct HurwitzTable {
    WeightFamily family;
    int N = 0;
    int d_max = 0;
    Route route = Route::characters;
    std::map<HurwitzKey, Rational> entries;
    std::map<HurwitzKey, Rational> connected;

    // Zero on weight mismatch; OutOfWindowError for d beyond d_max.
    Rational H(const Partition& mu, const Partition& nu, int d) const;
    Rational H_connected(const Partition& mu, const Partition& nu, int d) const;
};

// sum_d beta^d H^d(mu, nu) = (1/(z_mu z_nu)) sum_lambda chi^lambda(mu) chi^lambda(nu) r_lambda.
BetaSeries H_via_characters(const WeightFamily& f, const Partition& mu, const Partition& nu, int d_max);

// Sum over multisets of non-identity branch profiles with total colength d.
Rational H_via_profiles(const WeightFamily& f, const Partition& mu, const Partition& nu, int d);

// (1/N!) sum_{|lambda| = d} prod_i g_{lambda_i} * (monotone path count).
Rational H_via_paths(const WeightFamily& f, const Partition& mu, const Partition& nu, int d);

// Profile sum restricted to transitive factorizations (connected covers).
Rational H_connected_oracle(const WeightFamily& f, const Partition& mu, const Partition& nu, int d,
                            long long budget = 20'000'000);

// Connected numbers read off a plain log tau body for all |mu| = |nu| = N.
std::map<HurwitzKey, Rational> connected_from_log(const GradedPoly& log_body, int N, int d_max);

// Route R1 table for |mu| = |nu| = N, optionally with the connected table from log tau.
HurwitzTable hurwitz_table(const WeightFamily& f, int N, int d_max, bool with_connected = false);

// Connected table from log tau (route log); entries hold the same connected values.
HurwitzTable H_connected(const WeightFamily& f, int N, int d_max);

struct RouteReport {
    int checked = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// R1 = R2 = R3 for all |mu| = |nu| <= N_max and d <= d_max.
RouteReport verify_routes(const WeightFamily& f, int N_max, int d_max);

// Thread count from HURWITZ_TAU_THREADS (default 1).
int configured_threads();

}  // namespace hwtau
