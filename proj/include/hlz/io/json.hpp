#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "hlz/experiments.hpp"

namespace hlz::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Number rounded to 12 significant digits; infinities as "inf" / "-inf".
inline Json number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

inline Json numbers(std::span<const double> v) {
    Json a = Json::array();
    for (double x : v) a.push_back(number(x));
    return a;
}

/// Reads a number, accepting the "inf" / "-inf" spellings.
inline double read_number(const Json& j, const std::string& what) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return kInf;
        if (s == "-inf") return -kInf;
    }
    throw UnsupportedInputError(what + ": expected a number");
}

inline std::vector<double> read_numbers(const Json& j, const std::string& what) {
    if (!j.is_array()) throw UnsupportedInputError(what + ": expected an array");
    std::vector<double> out;
    for (const auto& x : j) out.push_back(read_number(x, what));
    return out;
}

inline const Json& field(const Json& j, const char* key, const std::string& what) {
    if (!j.is_object() || !j.contains(key)) throw UnsupportedInputError(what + ": missing field '" + key + "'");
    return j.at(key);
}

inline Support read_support(const Json& j, Support fallback) {
    if (!j.contains("support")) return fallback;
    const auto s = j.at("support").get<std::string>();
    if (s == "real-line") return Support::RealLine;
    if (s == "half-line") return Support::HalfLine;
    throw UnsupportedInputError("weight: unknown support '" + s + "'");
}

/// {"kind": "power", "exponent": a} or {"kind": "piecewise", "breakpoints":
/// [...], "values": [...], "tail_exponent": e}, optional "support".
inline Weight weight_from_json(const Json& j, Support fallback) {
    if (!j.is_object()) throw UnsupportedInputError("weight: expected an object");
    const auto kind = field(j, "kind", "weight").get<std::string>();
    const Support sup = read_support(j, fallback);
    if (kind == "power") return Weight::power(read_number(field(j, "exponent", "weight"), "weight.exponent"), sup);
    if (kind == "piecewise") {
        const double tail = j.contains("tail_exponent") ? read_number(j.at("tail_exponent"), "weight.tail_exponent") : 0.0;
        return Weight::piecewise(read_numbers(field(j, "breakpoints", "weight"), "weight.breakpoints"),
                                 read_numbers(field(j, "values", "weight"), "weight.values"), tail, sup);
    }
    throw UnsupportedInputError("weight: unknown kind '" + kind + "'");
}

inline Json to_json(const Weight& w) {
    Json j;
    j["kind"] = std::string(to_string(w.kind()));
    j["support"] = std::string(to_string(w.support()));
    if (w.is_power()) {
        j["exponent"] = number(w.exponent());
    } else {
        j["breakpoints"] = numbers(w.breakpoints());
        j["values"] = numbers(w.values());
        j["tail_exponent"] = number(w.tail_exponent());
    }
    return j;
}

/// {"segments": [[a, b, value], ...]}.
inline SimpleFunction function_from_json(const Json& j) {
    const auto& segs = field(j, "segments", "function");
    if (!segs.is_array()) throw UnsupportedInputError("function: segments must be an array");
    std::vector<Segment> out;
    for (const auto& s : segs) {
        if (!s.is_array() || s.size() != 3) throw UnsupportedInputError("function: each segment is [a, b, value]");
        out.push_back({read_number(s[0], "segment.a"), read_number(s[1], "segment.b"), read_number(s[2], "segment.value")});
    }
    return SimpleFunction::from_segments(std::move(out));
}

inline Json to_json(const SimpleFunction& f) {
    Json segs = Json::array();
    for (const auto& s : f.segments()) segs.push_back(Json::array({number(s.a), number(s.b), number(s.value)}));
    return Json{{"segments", segs}};
}

inline Json to_json(const MembershipReport& r) {
    Json j;
    j["class"] = r.class_name;
    j["verdict"] = std::string(to_string(r.verdict));
    j["constant"] = number(r.constant);
    j["empirical_constant"] = number(r.empirical_constant);
    j["witness"] = r.witness;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline Operator read_operator(const std::string& s) {
    if (s == "H") return Operator::Hilbert;
    if (s == "H*") return Operator::HilbertMaximal;
    if (s == "M") return Operator::HardyLittlewood;
    throw UnsupportedInputError("scenario: unknown operator '" + s + "'");
}

inline Scenario scenario_from_json(const Json& j) {
    if (!j.is_object()) throw UnsupportedInputError("scenario: expected an object");
    if (j.contains("schema") && j.at("schema") != kSchemaVersion)
        throw UnsupportedInputError("scenario: unsupported schema version");
    Scenario s;
    s.name = field(j, "name", "scenario").get<std::string>();
    s.u = weight_from_json(field(j, "u", "scenario"), Support::RealLine);
    s.w = weight_from_json(field(j, "w", "scenario"), Support::HalfLine);
    s.p = read_number(field(j, "p", "scenario"), "scenario.p");
    if (j.contains("q") && !j.at("q").is_null()) s.q = read_number(j.at("q"), "scenario.q");
    if (j.contains("operator")) s.op = read_operator(j.at("operator").get<std::string>());
    if (j.contains("norm_kind")) {
        const auto n = j.at("norm_kind").get<std::string>();
        if (n == "weak") s.norm = NormType::Weak;
        else if (n == "strong") s.norm = NormType::Strong;
        else throw UnsupportedInputError("scenario: unknown norm_kind '" + n + "'");
    }
    if (j.contains("check")) {
        const auto c = j.at("check").get<std::string>();
        if (c == "ratio") s.check = ScenarioCheck::Ratio;
        else if (c == "pointwise") s.check = ScenarioCheck::Pointwise;
        else if (c == "necessary") s.check = ScenarioCheck::Necessary;
        else throw UnsupportedInputError("scenario: unknown check '" + c + "'");
    }
    if (j.contains("dilation_steps")) s.dilation_steps = j.at("dilation_steps").get<int>();
    if (j.contains("test_family")) {
        const auto& f = j.at("test_family");
        const auto kind = field(f, "kind", "test_family").get<std::string>();
        if (kind == "random-simple") {
            s.family.kind = TestFamily::Kind::RandomSimple;
            if (f.contains("count")) s.family.count = f.at("count").get<std::size_t>();
            if (f.contains("seed")) s.family.seed = f.at("seed").get<std::uint64_t>();
        } else if (kind == "witness-sequence") {
            s.family.kind = TestFamily::Kind::WitnessSequence;
            s.family.nu = read_numbers(field(f, "nu", "test_family"), "test_family.nu");
            if (f.contains("probe")) {
                const auto pr = read_numbers(f.at("probe"), "test_family.probe");
                if (pr.size() != 2) throw UnsupportedInputError("test_family.probe: expected [a, b]");
                s.family.probe = {pr[0], pr[1]};
            }
        } else if (kind == "single") {
            s.family.kind = TestFamily::Kind::Single;
            s.family.single = function_from_json(field(f, "function", "test_family"));
        } else {
            throw UnsupportedInputError("test_family: unknown kind '" + kind + "'");
        }
    }
    if (j.contains("expected")) {
        const auto e = j.at("expected").get<std::string>();
        if (e == "bounded") s.expected = Expectation::Bounded;
        else if (e == "unbounded") s.expected = Expectation::Unbounded;
        else if (e == "report-only") s.expected = Expectation::ReportOnly;
        else throw UnsupportedInputError("scenario: unknown expected '" + e + "'");
    }
    return s;
}

inline Json to_json(const Scenario& s) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["name"] = s.name;
    j["u"] = to_json(s.u);
    j["w"] = to_json(s.w);
    j["p"] = number(s.p);
    if (s.q) j["q"] = number(*s.q);
    j["operator"] = std::string(to_string(s.op));
    j["norm_kind"] = std::string(to_string(s.norm));
    j["check"] = std::string(to_string(s.check));
    Json f;
    f["kind"] = std::string(to_string(s.family.kind));
    switch (s.family.kind) {
        case TestFamily::Kind::RandomSimple:
            f["count"] = s.family.count;
            f["seed"] = s.family.seed;
            break;
        case TestFamily::Kind::WitnessSequence:
            f["nu"] = numbers(s.family.nu);
            f["probe"] = Json::array({number(s.family.probe.a), number(s.family.probe.b)});
            break;
        case TestFamily::Kind::Single:
            f["function"] = to_json(s.family.single);
            break;
    }
    j["test_family"] = f;
    j["dilation_steps"] = s.dilation_steps;
    j["expected"] = std::string(to_string(s.expected));
    return j;
}

inline Json to_json(const OperatorNormEstimate& e) {
    Json j;
    Json ratios = Json::array();
    for (const auto& [id, v] : e.ratios) ratios.push_back(Json{{"id", id}, {"ratio", number(v)}});
    j["ratios"] = ratios;
    j["max_ratio"] = number(e.max_ratio);
    j["median_ratio"] = number(e.median_ratio);
    j["parameters"] = numbers(e.parameters);
    j["level_max"] = numbers(e.level_max);
    j["step_factors"] = numbers(e.step_factors);
    j["trend"] = number(e.trend);
    j["growth_exponent"] = number(e.growth_exponent);
    j["verdict"] = std::string(to_string(e.verdict));
    return j;
}

inline Json to_json(const PointwiseReport& r) {
    return Json{{"t", numbers(r.t)},
                {"lhs", numbers(r.lhs)},
                {"rhs", numbers(r.rhs)},
                {"tolerance", number(r.tolerance)},
                {"max_ratio", number(r.max_ratio)},
                {"holds", r.holds}};
}

inline Json to_json(const ScenarioResult& r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["scenario"] = to_json(r.scenario);
    Json certs = Json::array();
    for (const auto& c : r.certifications) certs.push_back(to_json(c));
    j["certifications"] = certs;
    j["estimate"] = to_json(r.estimate);
    if (!r.pointwise.empty()) {
        Json pw = Json::array();
        for (const auto& p : r.pointwise) pw.push_back(to_json(p));
        j["pointwise"] = pw;
    }
    j["expectation_met"] = r.expectation_met;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

/// Parses text, turning the byte offset of a syntax error into line:column.
inline Json parse(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw UnsupportedInputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                    ": malformed JSON");
    }
}

} // namespace hlz::io
