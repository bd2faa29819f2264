#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "degsplit/digraph.hpp"
#include "degsplit/pairing.hpp"

namespace degsplit {

using json = nlohmann::ordered_json;

/// Version marker carried by every split report; the JSON Schema document
/// ships under schemas/.
inline constexpr const char* split_report_schema = "degsplit.split-report.v1";

/// Fixed split-report shape shared by every method:
/// {schema, method, seed, params, A, B, stats, verified}.
inline json split_report_json(const std::string& method, std::uint64_t seed, json params,
                              const bipartition& split, json stats, bool verified) {
    json j;
    j["schema"] = split_report_schema;
    j["method"] = method;
    j["seed"] = seed;
    j["params"] = std::move(params);
    j["A"] = split.a();
    j["B"] = split.b();
    j["stats"] = std::move(stats);
    j["verified"] = verified;
    return j;
}

inline json bad_list_json(const std::vector<bad_vertex>& bad) {
    json arr = json::array();
    for (const auto& b : bad) arr.push_back({{"v", b.v}, {"x", b.x}, {"t", b.t}});
    return arr;
}

/// Reads the two sides back out of a report (for `verify`).
inline bipartition split_from_report(const json& report, int n) {
    if (!report.contains("A") || !report.contains("B"))
        throw std::invalid_argument("split report: missing A/B sides");
    std::vector<vertex> a = report.at("A").get<std::vector<vertex>>();
    std::vector<vertex> b = report.at("B").get<std::vector<vertex>>();
    return bipartition::from_sides(n, std::move(a), std::move(b));
}

/// Structured diagnostic for standard error.
inline json error_json(const std::string& type, const std::string& message) {
    return json{{"error", {{"type", type}, {"message", message}}}};
}

}  // namespace degsplit
