#pragma once

#include "rigidrank/connectivity.hpp"
#include "rigidrank/graph.hpp"
#include "rigidrank/rigidity.hpp"
#include "rigidrank/trimming.hpp"
#include "rigidrank/verify.hpp"

#include <json.hpp>

namespace rigidrank {

using nlohmann::json;

inline json to_json(const RankResult& r) {
    return json{{"rank", r.rank},
                {"stress_count", r.stress_count},
                {"method", r.method == RankMethod::ExactAtConfiguration ? "exact-at-configuration"
                                                                        : "generic-estimate"},
                {"trials", r.trials},
                {"certified", r.certified}};
}

inline json to_json(const ClassificationFlags& f) {
    return json{{"is_trimmed", f.is_trimmed},
                {"is_generically_trimmed", f.is_generically_trimmed},
                {"is_type_a4", f.is_type_a4},
                {"is_type_b4", f.is_type_b4},
                {"n4", f.n4},
                {"degree3_count_per_component", f.degree3_count_per_component}};
}

inline json to_json(const CutWitness& w) {
    json edges = json::array();
    for (const auto& [a, b] : w.edges_removed) edges.push_back(json::array({a, b}));
    return json{{"edges_removed", edges},
                {"components_before", w.components_before},
                {"components_after", w.components_after},
                {"minimal", w.minimal}};
}

inline json to_json(const TrimTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        json edges = json::array();
        for (const auto& [a, b] : s.removed_edges) edges.push_back(json::array({a, b}));
        steps.push_back(json{{"kind", to_string(s.kind)},
                             {"vertices", s.removed_vertices},
                             {"edges", edges}});
    }
    return json{{"steps", steps},
                {"final", edge_list_string(t.final_graph)},
                {"label_map", t.label_map}};
}

inline json to_json(const ConnectivityValue& c) {
    return json{{"value", c.value}, {"cap", c.cap}, {"at_least_cap", c.at_least_cap()}};
}

inline json to_json(const BoundReport& r) {
    json bounds = json::array();
    for (const auto& b : r.bounds) {
        json item{{"theorem", b.theorem},
                  {"bound", format_rational(b.bound)},
                  {"applies", b.applies},
                  {"satisfied", b.satisfied}};
        if (b.applies) item["slack"] = format_rational(b.slack);
        bounds.push_back(std::move(item));
    }
    json j{{"vertex_count", r.vertex_count},
           {"edge_count", r.edge_count},
           {"connectivity", {{"edge_conn", to_json(r.edge_conn)}, {"vertex_conn", to_json(r.vertex_conn)}}},
           {"generic_rank_estimate", r.generic_rank_estimate},
           {"generic_certified", r.generic_certified},
           {"escalated", r.escalated},
           {"bounds", bounds},
           {"all_satisfied", r.all_satisfied()}};
    if (r.general_position_rank) j["general_position_rank"] = *r.general_position_rank;
    return j;
}

inline json to_json(const CheckReport& r) {
    json items = json::array();
    for (const auto& i : r.items)
        items.push_back(json{{"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
    return json{{"items", items}, {"all_pass", r.all_pass()}};
}

}  // namespace rigidrank
