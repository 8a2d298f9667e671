#include "doctest.h"

#include "hwtau/cli_config.hpp"
#include "hwtau/errors.hpp"

using namespace hwtau;
using nlohmann::json;

TEST_CASE("strict rational parsing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-2/7") == Rational(-2, 7));
    CHECK(parse_rational("+5") == Rational(5));
    CHECK(parse_rational("0") == Rational(0));
    for (const char* bad : {"", "1/", "/2", "1/0", "1.5", "1e3", "a", "1/2/3", "--1", " 1"})
        CHECK_THROWS_AS(parse_rational(bad), DomainError);
    CHECK(parse_rational_list("1, 1/2,-3") == std::vector<Rational>{Rational(1), Rational(1, 2), Rational(-3)});
    CHECK(parse_rational_list("").empty());
    CHECK(parse_int_list("3,1,1") == std::vector<int>{3, 1, 1});
    CHECK_THROWS_AS(parse_int_list("3,x"), DomainError);
    CHECK(rational_text(Rational(4)) == "4/1");
    CHECK(rational_text(Rational(-6, 4)) == "-3/2");
}

TEST_CASE("merge and round trip") {
    RunConfig a;
    a.merge(json{{"family", "finite"}, {"c", json::array({"1", "1/2"})}, {"beta", "2/7"}, {"N", 4}});
    CHECK(a.c.size() == 2);
    CHECK(a.beta == Rational(2, 7));
    CHECK(a.N == 4);

    RunConfig b;
    b.merge(a.to_json());
    CHECK(b.to_json() == a.to_json());
    CHECK(b.hash() == a.hash());

    CHECK_THROWS_AS(a.merge(json{{"colour", "red"}}), ConfigError);
    CHECK_THROWS_AS(a.merge(json{{"N", "four"}}), ConfigError);
    CHECK_THROWS_AS(a.merge(json{{"connected", 1}}), ConfigError);
    CHECK_THROWS_AS(a.merge(json::array()), ConfigError);
}

TEST_CASE("later merges override earlier ones") {
    RunConfig cfg;
    cfg.merge(json{{"beta", "1/3"}, {"w_max", 6}});
    cfg.merge(json{{"beta", "2/7"}});
    CHECK(cfg.beta == Rational(2, 7));
    CHECK(cfg.w_max == 6);
}

TEST_CASE("hash is stable and sensitive") {
    RunConfig a, b;
    CHECK(a.hash() == b.hash());
    CHECK(a.hash().size() == 16);
    b.beta = Rational(1, 3);
    CHECK(a.hash() != b.hash());
    // FNV-1a reference values
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("validation names the violated constraint") {
    auto message = [](const RunConfig& cfg, const std::string& cmd) -> std::string {
        try {
            cfg.validate(cmd);
        } catch (const ConfigError& e) {
            return e.what();
        }
        return "";
    };
    RunConfig ok;
    CHECK(message(ok, "hurwitz").empty());
    CHECK(message(ok, "kernel").empty());

    RunConfig c = ok;
    c.family = "finite";
    CHECK(message(c, "tau").find("c-list") != std::string::npos);

    c = ok;
    c.family = "exp";
    CHECK(message(c, "basis").find("exp_beta") != std::string::npos);

    c = ok;
    c.family = "quantum";
    CHECK(message(c, "curve").find("quantum") != std::string::npos);

    c = ok;
    c.mu = {1, 2};
    c.nu = {3};
    c.d = 0;
    CHECK(message(c, "hurwitz").find("partitions") != std::string::npos);

    c = ok;
    c.z_hi = 0;
    CHECK(message(c, "kernel").find("z_hi <= -1") != std::string::npos);

    c = ok;
    c.format = "xml";
    CHECK(message(c, "tau").find("format") != std::string::npos);

    c = ok;
    c.resolve_index = true;
    CHECK(message(c, "cutjoin").find("exponential") != std::string::npos);

    c = ok;
    c.family = "exp";
    c.exp_beta = Rational(3, 2);
    c.check_finiteness = true;
    CHECK(message(c, "kernel").find("polynomial") != std::string::npos);

    c = ok;
    c.family = "nonsense";
    CHECK_THROWS_AS(c.validate("tau"), ConfigError);
    CHECK_THROWS_AS(ok.validate("frobnicate"), ConfigError);
}
