#include "hwtau/adapted_basis.hpp"
#include "hwtau/cli_config.hpp"
#include "hwtau/correlators.hpp"
#include "hwtau/cutjoin.hpp"
#include "hwtau/errors.hpp"
#include "hwtau/hurwitz.hpp"
#include "hwtau/tau.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace hwtau;
using nlohmann::json;

namespace {

enum ExitCode { exit_ok = 0, exit_config = 1, exit_resource = 2, exit_verification = 3 };

struct Output {
    json results = json::object();
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<CheckReport> reports;
    std::vector<std::string> text;

    void report(CheckReport r) { reports.push_back(std::move(r)); }
    bool ok() const {
        for (const auto& r : reports)
            if (r.failures() > 0) return false;
        return true;
    }
};

json ints(const std::vector<int>& v) { return json(v); }

json report_json(const CheckReport& r) {
    json checks = json::array();
    for (const auto& c : r.results)
        checks.push_back({{"name", c.name},
                          {"window", {c.window_lo, c.window_hi}},
                          {"pass", c.pass},
                          {"counterexample", c.counterexample}});
    return {{"suite", r.suite},
            {"checks", checks},
            {"skipped", r.skipped},
            {"failures", r.failures()},
            {"summary", r.summary()}};
}

std::string exps(const std::vector<int>& e) {
    std::string s = "(";
    for (size_t i = 0; i < e.size(); ++i) s += (i ? " " : "") + std::to_string(e[i]);
    return s + ")";
}

// Record that a check could not run at these parameters.
CheckReport skipped_report(const std::string& suite, const std::string& why) {
    CheckReport r;
    r.suite = suite;
    r.skipped.push_back(why);
    return r;
}

CheckReport route_report(const RouteReport& rr, const std::string& family) {
    CheckReport r;
    r.suite = "routes " + family;
    if (rr.ok()) {
        r.add({"characters = profiles = paths (" + std::to_string(rr.checked) + " entries)", 0, rr.checked, true, ""});
    } else {
        for (const auto& m : rr.mismatches) r.add({"route mismatch", 0, rr.checked, false, m});
    }
    return r;
}

void cmd_hurwitz(const RunConfig& cfg, Output& out) {
    const WeightFamily f = cfg.weight_family();
    const HurwitzTable t = hurwitz_table(f, cfg.N, cfg.d_max, cfg.connected);
    out.results["route"] = route_name(t.route);
    out.results["N"] = cfg.N;
    out.header = {"mu", "nu", "d", "H"};
    if (cfg.connected) out.header.push_back("H_connected");
    json entries = json::array();
    for (const auto& [key, v] : t.entries) {
        const auto& [mu, nu, d] = key;
        json e = {{"mu", mu.parts()}, {"nu", nu.parts()}, {"d", d}, {"H", rational_text(v)}};
        std::vector<std::string> row = {exps(mu.parts()), exps(nu.parts()), std::to_string(d), rational_text(v)};
        if (cfg.connected) {
            const Rational c = t.H_connected(mu, nu, d);
            e["H_connected"] = rational_text(c);
            row.push_back(rational_text(c));
        }
        entries.push_back(e);
        out.rows.push_back(row);
    }
    out.results["entries"] = entries;

    CheckReport cal;
    cal.suite = "calibration H^0 = delta/z_mu";
    for (const auto& mu : enumerate_partitions(cfg.N))
        for (const auto& nu : enumerate_partitions(cfg.N)) {
            const Rational expect = mu == nu ? Rational(1) / Rational(z_order(mu)) : Rational(0);
            check_equal(cal, "H^0(" + mu.str() + "," + nu.str() + ")", t.H(mu, nu, 0), expect, cfg.N, 0);
        }
    out.report(cal);

    if (!cfg.mu.empty()) {
        const Partition mu(cfg.mu), nu(cfg.nu);
        Rational v;
        if (mu.weight() == nu.weight()) v = H_via_characters(f, mu, nu, cfg.d_max)[cfg.d];
        out.results["query"] = {{"mu", mu.parts()}, {"nu", nu.parts()}, {"d", cfg.d}, {"H", rational_text(v)}};
        out.text.push_back("H^" + std::to_string(cfg.d) + "(" + mu.str() + "," + nu.str() + ") = " + rational_text(v));
    }
    if (cfg.verify_routes) out.report(route_report(verify_routes(f, cfg.N, cfg.d_max), f.describe()));
}

void cmd_tau(const RunConfig& cfg, Output& out) {
    const WeightFamily f = cfg.weight_family();
    const SConvention conv = cfg.convention == "plain" ? SConvention::plain : SConvention::beta_rescaled;
    const TauSeries tau = build_tau(f, cfg.w_max, cfg.d_max, conv);
    out.header = {"t", "s", "grade", "beta_power", "coeff"};
    json terms = json::array();
    for (const auto& [m, c] : tau.body.terms()) {
        const BetaLaurent v = with_convention(c, m.s, conv);
        json coeffs = json::object();
        for (int p = v.offset; p <= v.max_power(); ++p) {
            const Rational x = v.at(p);
            if (x == 0) continue;
            coeffs[std::to_string(p)] = rational_text(x);
            out.rows.push_back({exps(m.t), exps(m.s), std::to_string(m.grade), std::to_string(p), rational_text(x)});
        }
        terms.push_back({{"t", m.t}, {"s", m.s}, {"grade", m.grade}, {"beta", coeffs}});
    }
    out.results["terms"] = terms;
    out.results["convention"] = cfg.convention;

    const int probe = std::min(3, cfg.w_max / 2);
    if (probe >= 1) {
        CheckReport h;
        h.suite = "Hirota bilinear residual";
        const HirotaResidual res = hirota_residual(tau, probe);
        h.add({"residual vanishes at probe degree " + std::to_string(probe), 0, probe, res.is_zero(),
               res.is_zero() ? "" : res.first_term()});
        out.report(h);
    } else {
        out.report(skipped_report("Hirota bilinear residual", "w_max < 2 leaves no probe degree"));
    }
    CheckReport w;
    w.suite = "multicurrent W_n = d^n F_n";
    const int xdeg = std::min(3, cfg.w_max);
    for (int n = 1; n <= 2 && xdeg >= n; ++n) {
        const WFReport r = check_W_equals_dF(f, n, xdeg, cfg.d_max);
        w.add({"n=" + std::to_string(n) + " (" + std::to_string(r.terms_checked) + " terms)", 0, xdeg, r.ok,
               r.mismatches.empty() ? "" : r.mismatches.front()});
    }
    out.report(w);
}

void basis_rows(const BasisWindow& b, Output& out) {
    out.header = {"k", "series", "exponent", "coeff"};
    json ws = json::object(), wd = json::object();
    for (int k = b.k_lo; k <= b.k_hi; ++k) {
        for (int dual = 0; dual <= 1; ++dual) {
            const LaurentWindow& w = dual ? b.wk_dual(k) : b.wk(k);
            json coeffs = json::object();
            for (int e = w.hi(); e >= w.lo(); --e) {
                const Rational x = w.at(e);
                if (x == 0) continue;
                coeffs[std::to_string(e)] = rational_text(x);
                out.rows.push_back({std::to_string(k), dual ? "w*" : "w", std::to_string(e), rational_text(x)});
            }
            (dual ? wd : ws)[std::to_string(k)] = {{"valid_from", w.lo()}, {"coeffs", coeffs}};
        }
    }
    out.results["w"] = ws;
    out.results["w_dual"] = wd;
}

void cmd_basis(const RunConfig& cfg, Output& out) {
    const BasisWindow b = build_basis(cfg.weight_family(), cfg.point(), cfg.s, cfg.k_lo, cfg.k_hi, cfg.depth);
    basis_rows(b, out);
    out.report(basis_suite(b));
}

json matrix_json(const std::vector<std::vector<Rational>>& m) {
    json a = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(rational_text(x));
        a.push_back(r);
    }
    return a;
}

void cmd_kernel(const RunConfig& cfg, Output& out) {
    const WeightFamily f = cfg.weight_family();
    const EvalPoint pt = cfg.point();
    const int need = -cfg.z_lo - cfg.w_lo - 1;
    const int wm = std::max(cfg.w_max, need);
    const EvaluatedTau tau = evaluate_tau(f, pt, cfg.s, wm);
    const KernelWindow kt = K2_via_tau(tau, cfg.z_lo, cfg.z_hi, cfg.w_lo, cfg.w_hi);
    out.header = {"z_exp", "w_exp", "K2"};
    json cells = json::array();
    for (const auto& [key, v] : kt.cells) {
        cells.push_back({{"z", key.first}, {"w", key.second}, {"value", rational_text(v)}});
        out.rows.push_back({std::to_string(key.first), std::to_string(key.second), rational_text(v)});
    }
    out.results["K2"] = {{"z_window", {cfg.z_lo, cfg.z_hi}}, {"w_window", {cfg.w_lo, cfg.w_hi}},
                         {"tau_w_max", wm}, {"cells", cells}};

    CheckReport kb;
    kb.suite = "K2 via tau = via basis";
    try {
        const int depth = std::max({-cfg.z_lo, -cfg.w_lo, 1});
        const BasisWindow b = build_basis(f, pt, cfg.s, 1 + cfg.z_lo, -cfg.z_lo, depth);
        const KernelWindow kw = K2_via_basis(b, cfg.z_lo, cfg.z_hi, cfg.w_lo, cfg.w_hi);
        for (const auto& [key, v] : kt.cells)
            check_equal(kb, "cell (" + std::to_string(key.first) + "," + std::to_string(key.second) + ") j<=" +
                                std::to_string(kw.j_cutoff.at(key)),
                        v, kw.at(key.first, key.second), key.first, key.second);
        out.report(q_tilde_prefactor_check(b));
    } catch (const SingularParameterError& e) {
        kb.skipped.push_back(std::string("basis side singular: ") + e.what());
    }
    out.report(kb);

    if (f.is_polynomial()) {
        int L = 0;
        for (size_t k = 0; k < cfg.s.size(); ++k)
            if (cfg.s[k] != 0) L = static_cast<int>(k) + 1;
        const int LM = L * f.degree();
        const CDMatrix A = cd_matrix(f, pt, cfg.s, LM + 3);
        out.results["A"] = {{"LM", LM}, {"matrix", matrix_json(A.A)}};
        out.report(cd_finiteness(f, pt, cfg.s, 3));
        try {
            const BasisWindow b = build_basis(f, pt, cfg.s, 1 - LM, 1, 10);
            out.report(cd_kernel(b, tau, -2, 3, 3).report);
        } catch (const SingularParameterError& e) {
            out.report(skipped_report("cd_kernel", std::string("basis singular: ") + e.what()));
        }
        out.report(gen_A(f, pt, cfg.s, 8).report);
    } else {
        const CDMatrix A = cd_matrix(f, pt, cfg.s, 4);
        out.results["A"] = {{"LM", nullptr}, {"matrix", matrix_json(A.A)}};
        CheckReport r;
        r.suite = "cd_matrix forms";
        r.add({"sum over k form = G h h form (i,j <= 4)", 0, 4, A.forms_agree(), A.forms_agree() ? "" : "differ"});
        out.report(r);
    }
    out.report(h_orthogonality(cfg.s, 3, 12).report);
    out.report(multipair_check(tau, -4, -2, 3));
}

void cmd_curve(const RunConfig& cfg, Output& out) {
    const WeightFamily f = cfg.weight_family();
    out.results["text"] = classical_curve_text(f, cfg.s, cfg.gamma);
    out.text.push_back(out.results["text"].get<std::string>());
    out.header = {"deg_x", "deg_y", "coeff"};
    if (f.is_polynomial()) {
        const Bivariate P = classical_curve(f, cfg.s, cfg.gamma);
        json coeffs = json::array();
        for (const auto& [key, v] : P.coeffs) {
            coeffs.push_back({{"x", key.first}, {"y", key.second}, {"coeff", rational_text(v)}});
            out.rows.push_back({std::to_string(key.first), std::to_string(key.second), rational_text(v)});
        }
        out.results["P"] = coeffs;
    }
    try {
        const BasisWindow b = build_basis(f, cfg.point(), cfg.s, 0, 1, cfg.depth);
        out.report(quantum_curve_residual(b).report);
    } catch (const SingularParameterError& e) {
        out.report(skipped_report("quantum curve", std::string("basis singular: ") + e.what()));
    }
}

void cmd_cutjoin(const RunConfig& cfg, Output& out) {
    const WeightFamily f = cfg.weight_family();
    out.report(schur_eigen_check(2, 6, 8));
    if (cfg.resolve_index) {
        const IndexResolution r = resolve_exp_index(cfg.w_max, cfg.d_max);
        out.results["resolved_index"] = r.resolved;
        json holds = json::object();
        for (const auto& [k, v] : r.holds) holds[std::to_string(k)] = v;
        out.results["index_holds"] = holds;
        out.text.push_back(r.resolved >= 0 ? "tau_Exp = exp(beta Q_" + std::to_string(r.resolved) + ") exp(sum k t_k s_k)"
                                           : "no single index reproduces tau_Exp");
        out.report(r.report);
    }
    const ReconstructResult rec = reconstruct_tau(f, cfg.w_max, cfg.d_max, cfg.d_max, 4);
    out.results["reconstructed_terms"] = rec.tau.terms().size();
    out.report(rec.report);
    out.report(pde_check(f, cfg.w_max, cfg.d_max));
    if (f.is_polynomial() && f.degree() <= 2)
        out.report(single_rep_check(f, std::min(cfg.w_max, 4), cfg.d_max));
    else
        out.report(skipped_report("V_k single Hurwitz representation", "needs a polynomial G of degree <= 2"));
    out.header = {"suite", "check", "pass"};
    for (const auto& r : out.reports)
        for (const auto& c : r.results) out.rows.push_back({r.suite, c.name, c.pass ? "true" : "false"});
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

std::string render(const std::string& command, const RunConfig& cfg, const Output& out) {
    std::ostringstream os;
    if (cfg.format == "json") {
        json reports = json::array();
        for (const auto& r : out.reports) reports.push_back(report_json(r));
        json doc = {{"command", command}, {"config", cfg.to_json()}, {"config_hash", cfg.hash()},
                    {"results", out.results}, {"reports", reports}, {"ok", out.ok()}};
        os << doc.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        for (size_t i = 0; i < out.header.size(); ++i) os << (i ? "," : "") << csv_field(out.header[i]);
        os << '\n';
        for (const auto& row : out.rows) {
            for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
            os << '\n';
        }
        os << "\nsuite,check,window_lo,window_hi,pass,counterexample\n";
        for (const auto& r : out.reports)
            for (const auto& c : r.results)
                os << csv_field(r.suite) << ',' << csv_field(c.name) << ',' << c.window_lo << ',' << c.window_hi << ','
                   << (c.pass ? "true" : "false") << ',' << csv_field(c.counterexample) << '\n';
    } else {
        os << command << "  config " << cfg.hash() << '\n';
        for (const auto& line : out.text) os << line << '\n';
        for (const auto& row : out.rows) {
            for (size_t i = 0; i < row.size(); ++i) os << (i ? "  " : "") << row[i];
            os << '\n';
        }
        for (const auto& r : out.reports) {
            os << r.summary() << '\n';
            for (const auto& c : r.results)
                if (!c.pass) os << "  FAIL " << c.name << ": " << c.counterexample << '\n';
            for (const auto& s : r.skipped) os << "  skipped: " << s << '\n';
        }
        os << (out.ok() ? "all checks passed" : "verification FAILED") << '\n';
    }
    return os.str();
}

// Options shared by every subcommand; values stay strings until merged into RunConfig.
struct FlagSet {
    std::map<std::string, std::string> values;
    std::map<std::string, bool> switches;
    std::string config_file;
    std::string out_file;
};

void add_flags(CLI::App* sub, FlagSet& fs) {
    static const std::vector<std::pair<std::string, std::string>> valued = {
        {"family", "weight family: finite, dual, exp, quantum, belyi, signed, trivial"},
        {"c", "comma-separated c-list"},
        {"q", "quantum parameter"},
        {"beta", "rational beta"},
        {"gamma", "rational gamma"},
        {"exp-beta", "rational value standing for e^beta (exponential family)"},
        {"s", "comma-separated s-list"},
        {"s1", "shorthand for --s with a single entry"},
        {"convention", "plain or beta_rescaled"},
        {"N", "degree N"},
        {"dmax", "beta order / maximal d"},
        {"wmax", "weight cutoff"},
        {"depth", "z-depth of the basis windows"},
        {"klo", "lowest basis index"},
        {"khi", "highest basis index"},
        {"zlo", "kernel window: lowest z exponent"},
        {"zhi", "kernel window: highest z exponent"},
        {"wlo", "kernel window: lowest w exponent"},
        {"whi", "kernel window: highest w exponent"},
        {"mu", "single query: partition mu"},
        {"nu", "single query: partition nu"},
        {"d", "single query: d"},
        {"format", "json, csv or text"},
    };
    for (const auto& [name, help] : valued) sub->add_option("--" + name, fs.values[name], help);
    for (const auto& name : {"verify-routes", "connected", "check-finiteness", "resolve-index"})
        sub->add_flag(std::string("--") + name, fs.switches[name]);
    sub->add_option("--config", fs.config_file, "JSON config file; flags override it");
    sub->add_option("--out", fs.out_file, "write output to this file instead of stdout");
}

json flags_json(CLI::App* sub, const FlagSet& fs) {
    static const std::map<std::string, std::string> keys = {
        {"family", "family"}, {"c", "c"},         {"q", "q"},         {"beta", "beta"},     {"gamma", "gamma"},
        {"exp-beta", "exp_beta"}, {"s", "s"},     {"convention", "convention"},             {"N", "N"},
        {"dmax", "d_max"},    {"wmax", "w_max"},  {"depth", "depth"}, {"klo", "k_lo"},      {"khi", "k_hi"},
        {"zlo", "z_lo"},      {"zhi", "z_hi"},    {"wlo", "w_lo"},    {"whi", "w_hi"},      {"mu", "mu"},
        {"nu", "nu"},         {"d", "d"},         {"format", "format"},
    };
    json j = json::object();
    for (const auto& [flag, key] : keys)
        if (sub->count("--" + flag) > 0) j[key] = fs.values.at(flag);
    if (sub->count("--s1") > 0) j["s"] = fs.values.at("s1");
    static const std::map<std::string, std::string> sw = {{"verify-routes", "verify_routes"},
                                                          {"connected", "connected"},
                                                          {"check-finiteness", "check_finiteness"},
                                                          {"resolve-index", "resolve_index"}};
    for (const auto& [flag, key] : sw)
        if (sub->count("--" + flag) > 0) j[key] = fs.switches.at(flag);
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"Weighted Hurwitz numbers, hypergeometric tau-functions and their verification suites"};
    app.require_subcommand(1);
    std::map<std::string, FlagSet> flagsets;
    const std::vector<std::pair<std::string, std::string>> cmds = {
        {"hurwitz", "weighted Hurwitz number tables"},
        {"tau", "tau-function coefficients with Hirota and multicurrent checks"},
        {"basis", "adapted bases at a rational point with the recursion suite"},
        {"kernel", "pair correlator, Christoffel-Darboux matrix and kernel suite"},
        {"curve", "classical and quantum spectral curves"},
        {"cutjoin", "cut-and-join operators, reconstruction and PDEs"},
    };
    for (const auto& [name, help] : cmds) add_flags(app.add_subcommand(name, help), flagsets[name]);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    const FlagSet& fs = flagsets.at(command);

    try {
        RunConfig cfg;
        if (!fs.config_file.empty()) {
            std::ifstream in(fs.config_file);
            if (!in) throw ConfigError("cannot read config file " + fs.config_file);
            json file;
            try {
                file = json::parse(in);
            } catch (const json::exception& e) {
                throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
            }
            cfg.merge(file);
        }
        cfg.merge(flags_json(sub, fs));
        cfg.validate(command);

        Output out;
        if (command == "hurwitz") cmd_hurwitz(cfg, out);
        else if (command == "tau") cmd_tau(cfg, out);
        else if (command == "basis") cmd_basis(cfg, out);
        else if (command == "kernel") cmd_kernel(cfg, out);
        else if (command == "curve") cmd_curve(cfg, out);
        else cmd_cutjoin(cfg, out);

        const std::string text = render(command, cfg, out);
        if (fs.out_file.empty()) {
            std::cout << text;
        } else {
            std::ofstream o(fs.out_file, std::ios::binary);
            if (!o) throw ConfigError("cannot write " + fs.out_file);
            o << text;
        }
        if (!out.ok()) {
            for (const auto& r : out.reports)
                if (r.failures() > 0) std::cerr << "verification failed: " << r.first_failure() << '\n';
            return exit_verification;
        }
        return exit_ok;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return exit_resource;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
