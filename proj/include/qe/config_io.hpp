#pragma once

#include <cstddef>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qe/enumerate.hpp"
#include "qe/examples.hpp"

namespace qe {

// Insertion-ordered JSON keeps every emitted document byte-stable.
using Json = nlohmann::ordered_json;

struct ConfigParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Values are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that; both forms are accepted on input.
inline Json int_to_json(const Int& value) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (value >= lo && value <= hi) {
        return value.convert_to<long long>();
    }
    return value.str();
}

inline Int int_from_json(const Json& value, const std::string& where) {
    if (value.is_number_integer()) {
        if (value.is_number_unsigned()) {
            return Int(value.get<unsigned long long>());
        }
        return Int(value.get<long long>());
    }
    if (value.is_string()) {
        try {
            return Int(value.get<std::string>());
        } catch (const std::exception&) {
            throw ConfigParseError(where + ": \"" + value.get<std::string>() +
                                   "\" is not a decimal integer");
        }
    }
    throw ConfigParseError(where + " must be an integer");
}

inline Json int_list_to_json(const std::vector<Int>& values) {
    Json list = Json::array();
    for (const Int& value : values) {
        list.push_back(int_to_json(value));
    }
    return list;
}

inline void require_fields(const Json& object, const std::set<std::string>& allowed,
                           const std::set<std::string>& required, const std::string& what) {
    if (!object.is_object()) {
        throw ConfigParseError(what + " must be an object");
    }
    for (const auto& item : object.items()) {
        if (allowed.find(item.key()) == allowed.end()) {
            throw ConfigParseError(what + ": unknown field \"" + item.key() + "\"");
        }
    }
    for (const std::string& field : required) {
        if (!object.contains(field)) {
            throw ConfigParseError(what + ": missing field \"" + field + "\"");
        }
    }
}

}  // namespace detail

// Config document format: a single flat record
//   {"p": 3, "g": 0, "chi": 1, "t": 0,
//    "fibers": [{"kind": "tame", "a": 2}, ...]}
// Unknown fields are an error, not ignored, so typos in invariants
// cannot pass silently.
inline SurfaceConfig config_from_json(const Json& document) {
    detail::require_fields(document, {"p", "g", "chi", "t", "fibers"},
                           {"p", "g", "chi", "t", "fibers"}, "config");
    SurfaceConfig config;
    config.p = detail::int_from_json(document.at("p"), "p");
    config.g = detail::int_from_json(document.at("g"), "g");
    config.chi = detail::int_from_json(document.at("chi"), "chi");
    config.t = detail::int_from_json(document.at("t"), "t");
    const Json& fibers = document.at("fibers");
    if (!fibers.is_array()) {
        throw ConfigParseError("fibers must be a list");
    }
    for (std::size_t i = 0; i < fibers.size(); ++i) {
        const std::string where = "fibers[" + std::to_string(i) + "]";
        detail::require_fields(fibers[i], {"kind", "a"}, {"kind", "a"}, where);
        const Json& kind = fibers[i].at("kind");
        FiberDatum fiber;
        if (kind == "tame") {
            fiber.kind = FiberKind::Tame;
        } else if (kind == "wild") {
            fiber.kind = FiberKind::Wild;
        } else {
            throw ConfigParseError(where + ".kind must be \"tame\" or \"wild\"");
        }
        fiber.residue = detail::int_from_json(fibers[i].at("a"), where + ".a");
        config.fibers.push_back(std::move(fiber));
    }
    return config;
}

inline SurfaceConfig parse_config(const std::string& text) {
    Json document;
    try {
        document = Json::parse(text);
    } catch (const Json::parse_error& error) {
        throw ConfigParseError(std::string("config is not valid JSON: ") + error.what());
    }
    return config_from_json(document);
}

inline Json to_json(const SurfaceConfig& config) {
    Json fibers = Json::array();
    for (const FiberDatum& fiber : config.fibers) {
        fibers.push_back({{"kind", to_string(fiber.kind)},
                          {"a", detail::int_to_json(fiber.residue)}});
    }
    return {{"p", detail::int_to_json(config.p)},
            {"g", detail::int_to_json(config.g)},
            {"chi", detail::int_to_json(config.chi)},
            {"t", detail::int_to_json(config.t)},
            {"fibers", fibers}};
}

inline Json to_json(const ValidationReport& report) {
    Json violations = Json::array();
    for (const Violation& violation : report.violations) {
        violations.push_back({{"rule", violation.rule}, {"message", violation.message}});
    }
    return {{"valid", report.valid()}, {"violations", violations}};
}

inline Json to_json(const CanonicalClass& data) {
    return {{"base_coeff", detail::int_to_json(data.base_coeff)},
            {"residues", detail::int_list_to_json(data.residues)},
            {"p", detail::int_to_json(data.p)},
            {"g", detail::int_to_json(data.g)}};
}

inline Json to_json(const PlurigenusRecord& row) {
    return {{"m", detail::int_to_json(row.m)},
            {"degree", detail::int_to_json(row.degree)},
            {"h0_lower", detail::int_to_json(row.h0_lower)},
            {"h0_upper", detail::int_to_json(row.h0_upper)},
            {"gives_fibration", row.gives_fibration}};
}

inline Json to_json(const ThresholdCertificate& cert) {
    return {{"config", to_json(cert.config)},
            {"first_success", detail::int_to_json(cert.first_success)},
            {"stable_m", detail::int_to_json(cert.stable_m)},
            {"step", detail::int_to_json(cert.step)},
            {"failures", detail::int_list_to_json(cert.failures)},
            {"window", detail::int_list_to_json(cert.window)}};
}

inline Json to_json(const RegionBounds& bounds) {
    return {{"p", detail::int_to_json(bounds.p)},
            {"g_max", detail::int_to_json(bounds.g_max)},
            {"chi_plus_t_max", detail::int_to_json(bounds.chi_plus_t_max)},
            {"lambda_max", detail::int_to_json(bounds.lambda_max)},
            {"exclusions", bounds.exclusions}};
}

inline Json to_json(const CaseStats& stats) {
    return {{"label", stats.label},
            {"count", stats.count},
            {"max_stable", stats.max_stable ? detail::int_to_json(*stats.max_stable) : Json()},
            {"bound", stats.bound ? detail::int_to_json(*stats.bound) : Json()},
            {"pass", stats.pass}};
}

inline Json to_json(const TailCheck& check) {
    return {{"name", check.name}, {"pass", check.pass}, {"witness", check.witness}};
}

inline Json to_json(const CertificationReport& report) {
    Json extremals = Json::array();
    for (const SurfaceConfig& config : report.extremal_configs) {
        extremals.push_back(to_json(config));
    }
    Json per_case = Json::array();
    for (const CaseStats& stats : report.per_case) {
        per_case.push_back(to_json(stats));
    }
    Json split = Json::array();
    for (const CaseStats& stats : report.iii2_split) {
        split.push_back(to_json(stats));
    }
    Json tails = Json::array();
    for (const TailCheck& check : report.tail_checks) {
        tails.push_back(to_json(check));
    }
    return {{"bounds", to_json(report.bounds)},
            {"configs_checked", report.configs_checked},
            {"max_stable", report.max_stable ? detail::int_to_json(*report.max_stable) : Json()},
            {"extremal_configs", extremals},
            {"per_case", per_case},
            {"iii2_split", split},
            {"tail_checks", tails},
            {"pass", report.pass}};
}

}  // namespace qe
