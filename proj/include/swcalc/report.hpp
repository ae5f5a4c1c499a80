#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "errors.hpp"
#include "rational.hpp"
#include "sw.hpp"

namespace swcalc {

using ordered_json = nlohmann::ordered_json;

enum class Format { text, json, csv };

inline Format parse_format(const std::string& s) {
    if (s == "text")
        return Format::text;
    if (s == "json")
        return Format::json;
    if (s == "csv")
        return Format::csv;
    throw invalid_spec("unknown format '" + s + "' (expected text, json, or csv)");
}

/// Rationals are emitted as JSON numbers when they are integers fitting
/// int64, as canonical "n/d" strings otherwise, so output stays exact.
inline ordered_json json_number(const Rational& r) {
    if (is_integer(r) && fits_int64(numerator(r)))
        return ordered_json(static_cast<std::int64_t>(numerator(r)));
    return ordered_json(to_canonical(r));
}

inline ordered_json to_json(const SWResult& r) {
    ordered_json j;
    j["value"] = json_number(r.value);
    j["method"] = method_name(r.method);
    if (r.m0.has_value()) {
        ordered_json b;
        b["M0"] = json_number(*r.m0);
        b["M1"] = json_number(r.m1.value_or(Rational(0)));
        j["breakdown"] = b;
    } else {
        j["breakdown"] = nullptr;
    }
    j["expected_dim"] = r.expected_dim;
    j["verification_tier"] = r.verification_tier;
    return j;
}

inline std::string render(const SWResult& r, Format fmt) {
    switch (fmt) {
    case Format::json:
        return to_json(r).dump() + "\n";
    case Format::csv: {
        std::string out = "value,method,M0,M1,expected_dim,verification_tier\n";
        out += to_canonical(r.value) + "," + method_name(r.method) + ",";
        out += (r.m0 ? to_canonical(*r.m0) : "") + ",";
        out += (r.m1 ? to_canonical(*r.m1) : "") + ",";
        out += std::to_string(r.expected_dim) + "," + r.verification_tier + "\n";
        return out;
    }
    case Format::text: {
        std::string out = "value: " + to_canonical(r.value) + "\n";
        out += "method: " + std::string(method_name(r.method)) + "\n";
        if (r.m0)
            out += "breakdown: M0=" + to_canonical(*r.m0) + " M1=" + to_canonical(r.m1.value_or(Rational(0))) + "\n";
        out += "expected_dim: " + std::to_string(r.expected_dim) + "\n";
        out += "verification_tier: " + r.verification_tier + "\n";
        return out;
    }
    }
    return {};
}

/// Rendering for eval/grr/segre results: a scalar or a class in canonical
/// form, optionally with an integral attached (zero-dimensional Segre case).
inline std::string render_value(const std::string& kind, const std::string& text,
                                const std::optional<Rational>& integral, Format fmt) {
    switch (fmt) {
    case Format::json: {
        ordered_json j;
        j["kind"] = kind;
        j["result"] = text;
        if (integral)
            j["integral"] = json_number(*integral);
        return j.dump() + "\n";
    }
    case Format::csv: {
        std::string out = "kind,result";
        if (integral)
            out += ",integral";
        out += "\n" + kind + "," + text;
        if (integral)
            out += "," + to_canonical(*integral);
        return out + "\n";
    }
    case Format::text: {
        std::string out = text + "\n";
        if (integral)
            out += "integral: " + to_canonical(*integral) + "\n";
        return out;
    }
    }
    return {};
}

} // namespace swcalc
