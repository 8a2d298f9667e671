#pragma once

#include "hwtau/rational.hpp"
#include "hwtau/weights.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hwtau {

// "p/q", "p" or "-p/q"; DomainError on anything else or a zero denominator.
Rational parse_rational(const std::string& text);
// Comma-separated rationals; the empty string is the empty list.
std::vector<Rational> parse_rational_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);
// Always "p/q" with q >= 1.
std::string rational_text(const Rational& r);

struct RunConfig {
    std::string family = "belyi";  // finite | dual | exp | quantum | belyi | signed | trivial
    std::vector<Rational> c;
    Rational q{1, 2};
    Rational beta{1};
    Rational gamma{1};
    std::optional<Rational> exp_beta;
    std::vector<Rational> s{Rational(1)};
    std::string convention = "plain";  // plain | beta_rescaled

    int N = 3;
    int d_max = 3;
    int w_max = 4;
    int depth = 8;
    int k_lo = -3;
    int k_hi = 5;
    int z_lo = -6;
    int z_hi = -1;
    int w_lo = -2;
    int w_hi = 3;

    std::vector<int> mu;
    std::vector<int> nu;
    int d = -1;

    bool verify_routes = false;
    bool connected = false;
    bool check_finiteness = false;
    bool resolve_index = false;

    std::string format = "json";

    nlohmann::json to_json() const;
    // Keys absent from j keep their current values; unknown keys raise ConfigError.
    void merge(const nlohmann::json& j);

    WeightFamily weight_family() const;
    EvalPoint point() const;

    // Structural checks for the given subcommand; ConfigError names the violated constraint.
    void validate(const std::string& command) const;

    // FNV-1a (64 bit) of the canonical JSON form, as 16 hex digits.
    std::string hash() const;
};

uint64_t fnv1a64(const std::string& bytes);

}  // namespace hwtau
