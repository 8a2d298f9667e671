#include "hwtau/cli_config.hpp"

#include "hwtau/errors.hpp"

#include <cstdio>
#include <set>
#include <sstream>

namespace hwtau {

using nlohmann::json;

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
    }
    return out;
}

json rationals_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(rational_text(r));
    return a;
}

Rational rational_from(const json& j, const std::string& key) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ConfigError("config key '" + key + "' must be a rational string \"p/q\" or an integer");
}

std::vector<Rational> rationals_from(const json& j, const std::string& key) {
    if (j.is_string()) return parse_rational_list(j.get<std::string>());
    if (!j.is_array()) throw ConfigError("config key '" + key + "' must be an array of rationals");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rational_from(x, key));
    return out;
}

std::vector<int> ints_from(const json& j, const std::string& key) {
    if (j.is_string()) return parse_int_list(j.get<std::string>());
    if (!j.is_array()) throw ConfigError("config key '" + key + "' must be an array of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ConfigError("config key '" + key + "' must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

int int_from(const json& j, const std::string& key) {
    if (j.is_number_integer()) return j.get<int>();
    if (j.is_string()) {
        try {
            size_t pos = 0;
            const int v = std::stoi(j.get<std::string>(), &pos);
            if (pos == j.get<std::string>().size()) return v;
        } catch (const std::exception&) {
        }
    }
    throw ConfigError("config key '" + key + "' must be an integer");
}

bool bool_from(const json& j, const std::string& key) {
    if (j.is_boolean()) return j.get<bool>();
    throw ConfigError("config key '" + key + "' must be a boolean");
}

std::string string_from(const json& j, const std::string& key) {
    if (j.is_string()) return j.get<std::string>();
    throw ConfigError("config key '" + key + "' must be a string");
}

void require(bool cond, const std::string& constraint) {
    if (!cond) throw ConfigError("invalid configuration: " + constraint);
}

bool is_partition(const std::vector<int>& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw DomainError("empty rational");
    size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    bool slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '/' && !slash) {
            slash = true;
        } else if (ch >= '0' && ch <= '9') {
            (slash ? digit_after : digit_before) = true;
        } else {
            throw DomainError("not a rational: '" + text + "'");
        }
    }
    if (!digit_before || (slash && !digit_after)) throw DomainError("not a rational: '" + text + "'");
    std::string body = text[0] == '+' ? text.substr(1) : text;
    if (slash) {
        const auto p = body.find('/');
        if (Integer(body.substr(p + 1)) == 0) throw DomainError("zero denominator in '" + text + "'");
        return Rational(Integer(body.substr(0, p)), Integer(body.substr(p + 1)));
    }
    return Rational(Integer(body));
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& item : split_commas(text)) out.push_back(parse_rational(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& item : split_commas(text)) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (item.empty() || pos != item.size()) throw DomainError("not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::string rational_text(const Rational& r) { return r.num().get_str() + "/" + r.den().get_str(); }

json RunConfig::to_json() const {
    json j;
    j["family"] = family;
    j["c"] = rationals_json(c);
    j["q"] = rational_text(q);
    j["beta"] = rational_text(beta);
    j["gamma"] = rational_text(gamma);
    j["exp_beta"] = exp_beta ? json(rational_text(*exp_beta)) : json(nullptr);
    j["s"] = rationals_json(s);
    j["convention"] = convention;
    j["N"] = N;
    j["d_max"] = d_max;
    j["w_max"] = w_max;
    j["depth"] = depth;
    j["k_lo"] = k_lo;
    j["k_hi"] = k_hi;
    j["z_lo"] = z_lo;
    j["z_hi"] = z_hi;
    j["w_lo"] = w_lo;
    j["w_hi"] = w_hi;
    j["mu"] = mu;
    j["nu"] = nu;
    j["d"] = d;
    j["verify_routes"] = verify_routes;
    j["connected"] = connected;
    j["check_finiteness"] = check_finiteness;
    j["resolve_index"] = resolve_index;
    j["format"] = format;
    return j;
}

void RunConfig::merge(const json& j) {
    if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        const json& v = it.value();
        if (k == "family") family = string_from(v, k);
        else if (k == "c") c = rationals_from(v, k);
        else if (k == "q") q = rational_from(v, k);
        else if (k == "beta") beta = rational_from(v, k);
        else if (k == "gamma") gamma = rational_from(v, k);
        else if (k == "exp_beta") exp_beta = v.is_null() ? std::nullopt : std::optional<Rational>(rational_from(v, k));
        else if (k == "s") s = rationals_from(v, k);
        else if (k == "convention") convention = string_from(v, k);
        else if (k == "N") N = int_from(v, k);
        else if (k == "d_max") d_max = int_from(v, k);
        else if (k == "w_max") w_max = int_from(v, k);
        else if (k == "depth") depth = int_from(v, k);
        else if (k == "k_lo") k_lo = int_from(v, k);
        else if (k == "k_hi") k_hi = int_from(v, k);
        else if (k == "z_lo") z_lo = int_from(v, k);
        else if (k == "z_hi") z_hi = int_from(v, k);
        else if (k == "w_lo") w_lo = int_from(v, k);
        else if (k == "w_hi") w_hi = int_from(v, k);
        else if (k == "mu") mu = ints_from(v, k);
        else if (k == "nu") nu = ints_from(v, k);
        else if (k == "d") d = int_from(v, k);
        else if (k == "verify_routes") verify_routes = bool_from(v, k);
        else if (k == "connected") connected = bool_from(v, k);
        else if (k == "check_finiteness") check_finiteness = bool_from(v, k);
        else if (k == "resolve_index") resolve_index = bool_from(v, k);
        else if (k == "format") format = string_from(v, k);
        else throw ConfigError("unknown configuration key '" + k + "'");
    }
}

WeightFamily RunConfig::weight_family() const {
    if (family == "belyi") return WeightFamily::belyi();
    if (family == "signed") return WeightFamily::signed_hurwitz();
    if (family == "trivial") return WeightFamily::trivial();
    if (family == "exp") return WeightFamily::exponential();
    if (family == "quantum") return WeightFamily::quantum(q);
    if (family == "finite") return WeightFamily::finite(c);
    if (family == "dual") return WeightFamily::dual(c);
    throw ConfigError("unknown family '" + family + "' (expected finite, dual, exp, quantum, belyi, signed, trivial)");
}

EvalPoint RunConfig::point() const { return EvalPoint{beta, gamma, exp_beta}; }

void RunConfig::validate(const std::string& command) const {
    static const std::set<std::string> commands = {"hurwitz", "tau", "basis", "kernel", "curve", "cutjoin"};
    require(commands.count(command) == 1, "unknown command '" + command + "'");
    const WeightFamily f = weight_family();
    require(format == "json" || format == "csv" || format == "text", "format must be json, csv or text");
    require(convention == "plain" || convention == "beta_rescaled", "convention must be plain or beta_rescaled");
    if (family == "finite" || family == "dual") require(!c.empty(), "family '" + family + "' needs a nonempty c-list");
    if (family == "quantum") require(q != 0 && q < 1 && q > -1, "quantum family needs 0 < |q| < 1");
    require(d_max >= 0, "d_max >= 0");
    require(w_max >= 0, "w_max >= 0");
    require(gamma != 0, "gamma != 0");

    if (command == "hurwitz") {
        require(N >= 1, "N >= 1");
        require(is_partition(mu) && is_partition(nu), "mu and nu must be partitions (weakly decreasing positive parts)");
        require(mu.empty() == nu.empty(), "mu and nu must be given together");
        if (!mu.empty()) require(d >= 0 && d <= d_max, "a single query needs 0 <= d <= d_max");
    }
    if (command == "basis" || command == "kernel" || command == "curve") {
        require(beta != 0, "beta != 0 at a rational point");
        require(f.kind != FamilyKind::Quantum, "the quantum family has no exact value at a rational point");
        if (f.kind == FamilyKind::Exponential)
            require(exp_beta.has_value() && *exp_beta > 0, "the exponential family needs exp_beta > 0 standing for e^beta");
    }
    if (command == "basis") {
        require(k_lo <= k_hi, "k_lo <= k_hi");
        require(depth >= 1, "depth >= 1");
        require(k_lo - 1 >= -depth, "depth >= 1 - k_lo so that every w_k starts inside the window");
    }
    if (command == "kernel") {
        require(z_lo <= z_hi && z_hi <= -1, "z-window must satisfy z_lo <= z_hi <= -1");
        require(w_lo <= w_hi, "w_lo <= w_hi");
    }
    if (command == "cutjoin") {
        require(f.kind != FamilyKind::Quantum || d_max <= 4, "quantum cut-and-join limited to d_max <= 4");
        if (resolve_index) require(family == "exp", "--resolve-index applies to the exponential family");
    }
    if (check_finiteness) require(f.is_polynomial(), "finite rank of A needs a polynomial family");
}

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string RunConfig::hash() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(to_json().dump())));
    return buf;
}

}  // namespace hwtau
