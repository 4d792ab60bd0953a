#ifndef LAWRENCE_REPORT_HPP
#define LAWRENCE_REPORT_HPP

#include "lawrence/complexity.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace lawrence {

inline constexpr const char* tool_version = "1.0.0";
inline constexpr int report_schema_version = 1;
/// Bumped whenever row/column orders of model matrices change.
inline constexpr int canonical_order_version = 1;

using Json = nlohmann::ordered_json;

namespace detail {

inline Json integer_json(const Integer& x) {
    if (x.is_small()) return x.small_value();
    return x.str();  // beyond 64 bits: decimal string
}

inline Json vector_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(integer_json(x));
    return a;
}

inline Json sliced_json(const SlicedVector& u) {
    Json a = Json::array();
    for (std::size_t i = 0; i < u.slices(); ++i) a.push_back(vector_json(u.slice(i)));
    return a;
}

inline void put_outcome(Json& j, const std::string& key, const Outcome& o) {
    if (o.value) {
        j[key] = *o.value;
    } else {
        j[key] = nullptr;
        j[key + "_reason"] = o.reason;
    }
}

}  // namespace detail

/// Wall-clock seconds per stage, reported only on request because they make
/// otherwise identical reports differ.
struct Timings {
    double total_seconds = 0;
};

inline Json report_json(const ComplexityReport& r, const std::optional<Timings>& timings = std::nullopt) {
    Json j;
    j["schema_version"] = report_schema_version;
    j["tool_version"] = tool_version;
    j["canonical_order_version"] = canonical_order_version;
    j["model"] = render(r.model);
    j["dims"] = r.dims_rest;
    j["mode"] = to_string(r.mode);
    j["trivial_kernel"] = r.trivial_kernel;
    detail::put_outcome(j, "graver_complexity", r.graver_complexity);
    detail::put_outcome(j, "markov_complexity", r.markov_complexity);
    detail::put_outcome(j, "lower_bound", r.lower_bound);

    Json types;
    detail::put_outcome(types, "graver", r.graver_max_type);
    detail::put_outcome(types, "markov", r.markov_max_type);
    detail::put_outcome(types, "lower_bound", r.lower_bound_max_type);
    j["max_types"] = types;

    Json profile = Json::array();
    for (const auto& p : r.profile) profile.push_back(Json{{"r", p.r}, {"max_type", p.max_type}});
    j["per_r_profile"] = profile;
    j["r_examined"] = r.r_examined;
    j["heuristic_stop"] = r.heuristic_stop;

    Json w;
    w["graver_gamma"] = r.graver_gamma ? detail::vector_json(*r.graver_gamma) : Json(nullptr);
    w["graver_lifted"] = r.graver_witness ? detail::sliced_json(*r.graver_witness) : Json(nullptr);
    w["markov_lifted"] = r.markov_witness ? detail::sliced_json(*r.markov_witness) : Json(nullptr);
    w["lower_bound_gamma"] = r.lower_bound_gamma ? detail::vector_json(*r.lower_bound_gamma) : Json(nullptr);
    j["witnesses"] = w;

    j["sizes"] = Json{{"link_columns", r.link_columns},
                      {"deletion_rows", r.deletion_rows},
                      {"graver_link", r.graver_a_size},
                      {"graver_lifted_columns", r.graver_m_size},
                      {"semiconformal_free", r.semiconformal_size}};

    Json caps;
    caps["max_fiber_points"] = r.caps.max_fiber_points;
    caps["max_basis_elements"] = r.caps.max_basis_elements;
    caps["max_r"] = r.caps.max_r ? Json(*r.caps.max_r) : Json(nullptr);
    caps["time_limit_seconds"] = r.caps.time_limit ? Json(r.caps.time_limit->count()) : Json(nullptr);
    j["caps"] = caps;

    if (timings) {
        j["timings"] = Json{{"total_seconds", timings->total_seconds}};
    } else {
        j["timings"] = nullptr;
        j["timings_reason"] = "omitted so that repeated runs are byte-identical; pass --timings";
    }
    return j;
}

inline std::string render_report(const ComplexityReport& r, const std::optional<Timings>& timings = std::nullopt) {
    return report_json(r, timings).dump(2) + "\n";
}

inline std::string summary_line(const ComplexityReport& r) {
    auto s = [](const Outcome& o) { return o.value ? std::to_string(*o.value) : std::string("null"); };
    return "m=" + s(r.markov_complexity) + ", g=" + s(r.graver_complexity) + ", lb=" + s(r.lower_bound);
}

}  // namespace lawrence

#endif
