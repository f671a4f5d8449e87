#pragma once

#include <json.hpp>

#include <string>

#include "hyperseq/errors.hpp"
#include "hyperseq/gaussian.hpp"
#include "hyperseq/orthopoly.hpp"
#include "hyperseq/rational.hpp"
#include "hyperseq/report.hpp"
#include "hyperseq/sequence.hpp"
#include "hyperseq/series.hpp"
#include "hyperseq/transforms.hpp"

namespace hyperseq {

// Wire formats. Rationals travel as "p" / "p/q" strings; a value of Q(i)
// as a two-element array [re, im] of rational strings, with a bare string
// accepted (and emitted) when the imaginary part is zero.

inline nlohmann::json gaussian_to_json(const GaussianRational& g) {
    if (g.is_real())
        return g.re.to_string();
    return nlohmann::json::array({g.re.to_string(), g.im.to_string()});
}

inline nlohmann::json gaussian_to_json_pair(const GaussianRational& g) {
    return nlohmann::json::array({g.re.to_string(), g.im.to_string()});
}

inline GaussianRational gaussian_from_json(const nlohmann::json& j) {
    if (j.is_string())
        return GaussianRational(Rational::parse(j.get<std::string>()));
    if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string())
        return {Rational::parse(j[0].get<std::string>()),
                Rational::parse(j[1].get<std::string>())};
    throw ParseError("expected a rational string or a [re, im] pair, got " + j.dump());
}

inline nlohmann::json sequence_to_json(const Sequence& x) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& value : x.entries)
        entries.push_back(gaussian_to_json_pair(value));
    return nlohmann::json{{"seq", entries}};
}

inline Sequence sequence_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("seq") || !j["seq"].is_array())
        throw ParseError("sequence document needs a \"seq\" array");
    Sequence x;
    for (const auto& entry : j["seq"])
        x.entries.push_back(gaussian_from_json(entry));
    if (x.entries.empty())
        throw ParseError("sequence must be nonempty");
    return x;
}

inline nlohmann::json transform_to_json(const TransformSpec& spec) {
    nlohmann::json j{{"kind", kind_name(spec.kind)}};
    switch (spec.kind) {
    case TransformKind::L:
    case TransformKind::LInverse:
    case TransformKind::LTilde:
    case TransformKind::LTildeInverse:
        j["a"] = gaussian_to_json(spec.a);
        break;
    case TransformKind::Lab:
    case TransformKind::LabInverse:
        j["a"] = gaussian_to_json(spec.a);
        j["b"] = gaussian_to_json(spec.b);
        break;
    default:
        break;
    }
    return j;
}

inline TransformSpec transform_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("transform document needs a \"kind\" string");
    const std::string kind = j["kind"].get<std::string>();
    TransformSpec spec;
    bool needs_a = false;
    bool needs_b = false;
    if (kind == "identity") {
        spec.kind = TransformKind::Identity;
    } else if (kind == "binomial-signed") {
        spec.kind = TransformKind::BinomialSigned;
    } else if (kind == "binomial-unsigned") {
        spec.kind = TransformKind::BinomialUnsigned;
    } else if (kind == "binomial-unsigned-inverse") {
        spec.kind = TransformKind::BinomialUnsignedInverse;
    } else if (kind == "L") {
        spec.kind = TransformKind::L;
        needs_a = true;
    } else if (kind == "L-inverse") {
        spec.kind = TransformKind::LInverse;
        needs_a = true;
    } else if (kind == "Ltilde") {
        spec.kind = TransformKind::LTilde;
        needs_a = true;
    } else if (kind == "Ltilde-inverse") {
        spec.kind = TransformKind::LTildeInverse;
        needs_a = true;
    } else if (kind == "Lab") {
        spec.kind = TransformKind::Lab;
        needs_a = needs_b = true;
    } else if (kind == "Lab-inverse") {
        spec.kind = TransformKind::LabInverse;
        needs_a = needs_b = true;
    } else {
        throw ParseError("unknown transform kind \"" + kind + "\"");
    }
    if (needs_a) {
        if (!j.contains("a"))
            throw ParseError("transform kind \"" + kind + "\" needs parameter a");
        spec.a = gaussian_from_json(j["a"]);
    }
    if (needs_b) {
        if (!j.contains("b"))
            throw ParseError("transform kind \"" + kind + "\" needs parameter b");
        spec.b = gaussian_from_json(j["b"]);
    }
    return spec;
}

inline nlohmann::json series_to_json(const HypSeriesSpec& spec) {
    nlohmann::json num = nlohmann::json::array();
    for (const auto& a : spec.numerator_params)
        num.push_back(gaussian_to_json_pair(a));
    nlohmann::json den = nlohmann::json::array();
    for (const auto& b : spec.denominator_params)
        den.push_back(gaussian_to_json_pair(b));
    return nlohmann::json{
        {"num", num}, {"den", den}, {"z", gaussian_to_json_pair(spec.argument)}};
}

inline HypSeriesSpec series_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j.contains("z"))
        throw ParseError("series document needs \"num\", \"den\" and \"z\"");
    HypSeriesSpec spec;
    for (const auto& a : j["num"])
        spec.numerator_params.push_back(gaussian_from_json(a));
    for (const auto& b : j["den"])
        spec.denominator_params.push_back(gaussian_from_json(b));
    spec.argument = gaussian_from_json(j["z"]);
    return spec;
}

inline nlohmann::json family_to_json(const FamilySpec& spec) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [name, value] : spec.params)
        params[name] = gaussian_to_json(value);
    return nlohmann::json{{"family", family_name(spec.family)}, {"params", params}};
}

inline FamilySpec family_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
        throw ParseError("family document needs a \"family\" string");
    const auto family = family_from_name(j["family"].get<std::string>());
    if (!family)
        throw ParseError("unknown family \"" + j["family"].get<std::string>() + "\"");
    FamilySpec spec;
    spec.family = *family;
    if (j.contains("params")) {
        if (!j["params"].is_object())
            throw ParseError("family \"params\" must be an object");
        for (const auto& [name, value] : j["params"].items())
            spec.params[name] = gaussian_from_json(value);
    }
    return spec;
}

inline nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json draw = nlohmann::json::object();
    for (const auto& [name, value] : report.parameter_draw)
        draw[name] = value;
    nlohmann::json j{{"identity", report.identity},
                     {"parameter_draw", draw},
                     {"n_range", nlohmann::json::array({0, report.n_max})},
                     {"trials", report.trials},
                     {"status", status_name(report.status)},
                     {"elapsed_ms", report.elapsed_ms},
                     {"seed", report.seed}};
    if (report.counterexample) {
        j["counterexample"] = nlohmann::json{
            {"n", report.counterexample->n},
            {"lhs", gaussian_to_json_pair(report.counterexample->lhs)},
            {"rhs", gaussian_to_json_pair(report.counterexample->rhs)}};
    } else {
        j["counterexample"] = nullptr;
    }
    if (!report.notes.empty())
        j["notes"] = report.notes;
    return j;
}

} // namespace hyperseq
