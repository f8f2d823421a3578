// Command-line front end: certify, norm, transform, scenario run, list.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hlz/hlz.hpp"
#include "hlz/io/json.hpp"
#include "hlz/io/svg.hpp"

namespace fs = std::filesystem;
using hlz::io::Json;

namespace {

constexpr std::uint64_t kDefaultSeed = 20130101;

struct ExpectationFailure {};

/// Inline JSON when the text starts with '{' or '[', otherwise a file path.
Json load_json(const std::string& arg, const std::string& what) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
        return hlz::io::parse(arg, what);
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw hlz::UnsupportedInputError(what + ": cannot read '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return hlz::io::parse(ss.str(), arg);
}

std::string default_output_dir() {
    const char* env = std::getenv("HLZ_OUTPUT_DIR");
    return env && *env ? env : ".";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_number(double v) {
    const Json j = hlz::io::number(v);
    return j.is_string() ? j.get<std::string>() : j.dump();
}

hlz::LogAxis read_axis(const Json& j, const char* what) {
    const auto v = hlz::io::read_numbers(j, what);
    if (v.size() != 3) throw hlz::UnsupportedInputError(std::string(what) + ": expected [lo, hi, points]");
    return {v[0], v[1], static_cast<std::size_t>(v[2])};
}

hlz::SearchConfig read_search(const std::string& arg) {
    hlz::SearchConfig cfg;
    if (arg.empty()) return cfg;
    const Json j = load_json(arg, "search");
    if (j.contains("scales")) cfg.scales = read_axis(j.at("scales"), "search.scales");
    if (j.contains("fractions")) cfg.fractions = read_axis(j.at("fractions"), "search.fractions");
    if (j.contains("lambdas")) cfg.lambdas = read_axis(j.at("lambdas"), "search.lambdas");
    if (j.contains("centers")) cfg.centers = hlz::io::read_numbers(j.at("centers"), "search.centers");
    hlz::require_domain(!cfg.centers.empty() && cfg.scales.points > 0 && cfg.fractions.points > 0,
                        "search: grids must be nonempty");
    return cfg;
}

struct CertifyArgs {
    std::string cls;
    double p = 1.0;
    double q = 0.0;
    std::string weight, u, w, search;
    bool table = false;
};

hlz::MembershipReport certify_once(const CertifyArgs& a, const hlz::SearchConfig& cfg) {
    using hlz::Support;
    auto line = [&] { return hlz::io::weight_from_json(load_json(a.weight.empty() ? a.u : a.weight, "weight"), Support::RealLine); };
    auto half = [&] { return hlz::io::weight_from_json(load_json(a.weight.empty() ? a.w : a.weight, "weight"), Support::HalfLine); };
    auto pair_u = [&] { return hlz::io::weight_from_json(load_json(a.u, "u"), Support::RealLine); };
    auto pair_w = [&] { return hlz::io::weight_from_json(load_json(a.w, "w"), Support::HalfLine); };
    const auto& c = a.cls;
    if (c == "A_p") return hlz::check_Ap(line(), a.p, cfg);
    if (c == "A_1") return hlz::check_A1(line(), cfg);
    if (c == "B_p") return hlz::check_Bp(half(), a.p, cfg);
    if (c == "B_p,inf" || c == "B_p_weak") return hlz::check_Bp_weak(half(), a.p, cfg);
    if (c == "B*_inf" || c == "Bstar_infty") return hlz::check_Bstar_infty(half(), cfg);
    if (c == "Delta_2") return hlz::check_delta2(half(), cfg);
    if (c == "p_w") {
        hlz::MembershipReport r;
        r.class_name = "p_w";
        const auto w = half();
        r.constant = r.empirical_constant = hlz::p_w_index(w);
        r.verdict = w.is_power() ? hlz::Verdict::CertifiedIn : hlz::Verdict::Empirical;
        r.note = "index value";
        return r;
    }
    if (c == "quasiconcave_uw") return hlz::check_quasiconcave_uw(pair_u(), pair_w(), a.p, cfg);
    if (c == "gen_hardy_nec") return hlz::check_gen_hardy_nec(pair_u(), pair_w(), a.p, cfg);
    if (c == "dual_pair") return hlz::check_dual_pair(pair_u(), pair_w(), a.p, cfg);
    if (c == "log_condition") return hlz::check_log_condition(pair_u(), pair_w(), a.p, cfg);
    if (c == "crs_maximal") {
        const double q = a.q > 0.0 ? a.q : 0.5 * a.p;
        return hlz::check_crs_maximal_condition(pair_u(), pair_w(), a.p, q, hlz::generate_families(cfg));
    }
    throw hlz::UnsupportedInputError("certify: unknown class '" + c + "'");
}

int run_certify(const CertifyArgs& a, const std::string& out_dir, bool write_files) {
    const auto cfg = read_search(a.search);
    if (a.table) {
        // One row per scale: the constant with the grid restricted to that scale.
        std::string csv = "scale,constant\n";
        for (double s : cfg.scales.values()) {
            auto c = cfg;
            c.scales = {s, s, 1};
            csv += csv_number(s) + "," + csv_number(certify_once(a, c).empirical_constant) + "\n";
        }
        std::cout << csv;
        if (write_files) hlz::io::write_atomic(fs::path(out_dir) / "certify_table.csv", csv);
        return 0;
    }
    Json j = hlz::io::to_json(certify_once(a, cfg));
    j = Json{{"schema", hlz::io::kSchemaVersion}, {"report", j}};
    std::cout << dump(j);
    if (write_files) hlz::io::write_atomic(fs::path(out_dir) / "certify.json", dump(j));
    return 0;
}

struct NormArgs {
    std::string kind = "lambda";
    double p = 1.0;
    std::string function, u, w;
};

int run_norm(const NormArgs& a) {
    const auto f = hlz::io::function_from_json(load_json(a.function, "function"));
    const auto u = a.u.empty() ? hlz::Weight::line_power(0.0)
                               : hlz::io::weight_from_json(load_json(a.u, "u"), hlz::Support::RealLine);
    const auto w = a.w.empty() ? hlz::Weight::half_power(0.0)
                               : hlz::io::weight_from_json(load_json(a.w, "w"), hlz::Support::HalfLine);
    hlz::NormKind k;
    k.p = a.p;
    if (a.kind == "lambda") k.family = hlz::NormFamily::LambdaStrong;
    else if (a.kind == "lambda-weak") k.family = hlz::NormFamily::LambdaWeak;
    else if (a.kind == "gamma") k.family = hlz::NormFamily::GammaStrong;
    else if (a.kind == "gamma-weak") k.family = hlz::NormFamily::GammaWeak;
    else if (a.kind == "associate") k.family = hlz::NormFamily::Associate;
    else throw hlz::UnsupportedInputError("norm: unknown kind '" + a.kind + "'");
    const Json j{{"schema", hlz::io::kSchemaVersion},
                 {"kind", a.kind},
                 {"p", hlz::io::number(a.p)},
                 {"norm", hlz::io::number(hlz::norm(k, f, u, w))}};
    std::cout << dump(j);
    return 0;
}

struct TransformArgs {
    std::string op = "H";
    std::string function;
    std::vector<double> xs;
    double eps = 0.0;
};

int run_transform(const TransformArgs& a) {
    const auto f = hlz::io::function_from_json(load_json(a.function, "function"));
    Json vals = Json::array();
    for (double x : a.xs) {
        double v = 0.0;
        if (a.op == "H") v = hlz::hilbert_exact(f, x);
        else if (a.op == "H_eps") v = hlz::hilbert_truncated(f, x, a.eps);
        else if (a.op == "H*") v = hlz::hilbert_maximal(f, x);
        else if (a.op == "M") v = hlz::hl_maximal(f, x);
        else throw hlz::UnsupportedInputError("transform: unknown operator '" + a.op + "'");
        vals.push_back(Json{{"x", hlz::io::number(x)}, {"value", hlz::io::number(v)}});
    }
    std::cout << dump(Json{{"schema", hlz::io::kSchemaVersion}, {"operator", a.op}, {"values", vals}});
    return 0;
}

struct ScenarioArgs {
    std::string target;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
    bool plot = false;
};

int run_scenario_cmd(const ScenarioArgs& a, const std::string& out_dir) {
    hlz::Scenario s;
    const auto names = hlz::builtin_scenario_names();
    if (std::find(names.begin(), names.end(), a.target) != names.end()) {
        s = hlz::builtin_scenario(a.target);
    } else {
        s = hlz::io::scenario_from_json(load_json(a.target, "scenario"));
    }
    if (a.seed) s.family.seed = *a.seed;
    const auto res = hlz::run_scenario(s);
    const std::string json = dump(hlz::io::to_json(res));

    std::string ratios = "id,ratio\n";
    for (const auto& [id, v] : res.estimate.ratios) ratios += id + "," + csv_number(v) + "\n";
    std::string trend = "parameter,max_ratio\n";
    for (std::size_t i = 0; i < res.estimate.parameters.size(); ++i)
        trend += csv_number(res.estimate.parameters[i]) + "," + csv_number(res.estimate.level_max[i]) + "\n";

    fs::create_directories(out_dir);
    const fs::path base = fs::path(out_dir) / s.name;
    hlz::io::write_atomic(base.string() + ".json", json);
    hlz::io::write_atomic(base.string() + "_ratios.csv", ratios);
    hlz::io::write_atomic(base.string() + "_trend.csv", trend);
    if (a.plot) {
        std::vector<hlz::io::Series> series;
        std::string xlabel = "witness parameter", ylabel = "max ratio";
        if (!res.pointwise.empty()) {
            const auto& pw = res.pointwise.front();
            series = {{"(H*f)*(t)", pw.t, pw.lhs}, {"Pf*(t) + Qf*(t)", pw.t, pw.rhs}};
            xlabel = "t";
            ylabel = "value";
        } else {
            series = {{"max ratio", res.estimate.parameters, res.estimate.level_max}};
        }
        hlz::io::write_atomic(base.string() + ".svg", hlz::io::svg_plot(series, s.name, xlabel, ylabel));
    }
    std::cout << (a.format == "csv" ? ratios : json);
    if (!res.expectation_met) throw ExpectationFailure{};
    return 0;
}

int run_list() {
    Json j;
    j["schema"] = hlz::io::kSchemaVersion;
    Json names = Json::array();
    for (const auto& n : hlz::builtin_scenario_names()) names.push_back(n);
    j["scenarios"] = names;
    j["classes"] = Json::array({"A_p", "A_1", "B_p", "B_p,inf", "B*_inf", "Delta_2", "p_w", "quasiconcave_uw",
                                "gen_hardy_nec", "dual_pair", "log_condition", "crs_maximal"});
    j["norms"] = Json::array({"lambda", "lambda-weak", "gamma", "gamma-weak", "associate"});
    j["operators"] = Json::array({"H", "H_eps", "H*", "M"});
    std::cout << dump(j);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted Lorentz space toolkit for the Hilbert transform"};
    app.require_subcommand(1);
    std::string out_dir = default_output_dir();
    bool write_files = false;
    app.add_option("--output-dir", out_dir, "Directory for written outputs (default: $HLZ_OUTPUT_DIR or .)");

    CertifyArgs ca;
    auto* certify = app.add_subcommand("certify", "Certify a weight class");
    certify->add_option("--class", ca.cls, "Class name (see `list`)")->required();
    certify->add_option("--p", ca.p, "Exponent p");
    certify->add_option("--q", ca.q, "Exponent q (crs_maximal)");
    certify->add_option("--weight", ca.weight, "Weight JSON (inline or file) for single-weight classes");
    certify->add_option("--u", ca.u, "Weight u on the line");
    certify->add_option("--w", ca.w, "Weight w on the half-line");
    certify->add_option("--search", ca.search, "SearchConfig overrides JSON");
    certify->add_flag("--table", ca.table, "CSV of constants per grid scale");
    certify->add_flag("--write", write_files, "Also write the output into the output directory");

    NormArgs na;
    auto* norm = app.add_subcommand("norm", "Evaluate a Lorentz-type norm");
    norm->add_option("--kind", na.kind, "lambda | lambda-weak | gamma | gamma-weak | associate");
    norm->add_option("--p", na.p, "Exponent p")->required();
    norm->add_option("--function", na.function, "SimpleFunction JSON")->required();
    norm->add_option("--u", na.u, "Weight u (default 1)");
    norm->add_option("--w", na.w, "Weight w (default 1)");

    TransformArgs ta;
    auto* transform = app.add_subcommand("transform", "Evaluate H, H_eps, H* or M pointwise");
    transform->add_option("--op", ta.op, "H | H_eps | H* | M");
    transform->add_option("--function", ta.function, "SimpleFunction JSON")->required();
    transform->add_option("--x", ta.xs, "Evaluation points")->required();
    transform->add_option("--eps", ta.eps, "Truncation for H_eps");

    ScenarioArgs sa;
    auto* scenario = app.add_subcommand("scenario", "Scenario runner");
    auto* run = scenario->add_subcommand("run", "Run a builtin or JSON scenario");
    scenario->require_subcommand(1);
    run->add_option("target", sa.target, "Builtin name or scenario JSON file")->required();
    std::uint64_t seed = kDefaultSeed;
    auto* seed_opt = run->add_option("--seed", seed, "Override the family seed");
    run->add_option("--format", sa.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    run->add_flag("--plot", sa.plot, "Write an SVG plot");

    auto* list = app.add_subcommand("list", "List builtin scenarios, classes, norms and operators");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (seed_opt->count() > 0) sa.seed = seed;

    try {
        if (certify->parsed()) return run_certify(ca, out_dir, write_files);
        if (norm->parsed()) return run_norm(na);
        if (transform->parsed()) return run_transform(ta);
        if (run->parsed()) return run_scenario_cmd(sa, out_dir);
        if (list->parsed()) return run_list();
    } catch (const ExpectationFailure&) {
        std::cerr << "scenario expectation not met\n";
        return 1;
    } catch (const hlz::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
