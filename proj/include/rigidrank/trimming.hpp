#pragma once

#include "rigidrank/connectivity.hpp"
#include "rigidrank/graph.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigidrank {

enum class TrimStepKind {
    DeleteLowDegreeVertex,   // rule (1): one vertex of degree <= 2
    RemoveSmallCut,          // rule (2): minimal cut of size 1 or 2
    RemoveSpreadThreeCut,    // rule (3): minimal 3-cut, edges share no vertex
};

inline const char* to_string(TrimStepKind k) {
    switch (k) {
        case TrimStepKind::DeleteLowDegreeVertex: return "delete-low-degree-vertex";
        case TrimStepKind::RemoveSmallCut: return "remove-cut-of-size-1-or-2";
        case TrimStepKind::RemoveSpreadThreeCut: return "remove-3-cut-no-common-vertex";
    }
    return "?";
}

/// One reduction step; vertices and edges are in the original graph's labels.
struct TrimStep {
    TrimStepKind kind;
    std::vector<int> removed_vertices;
    std::vector<Edge> removed_edges;
    int degree_at_removal = -1;  // rule (1) only
};

/// Full log of a trimming run. label_map[i] is the original label of final
/// vertex i.
struct TrimTrace {
    std::vector<TrimStep> steps;
    Graph initial_graph;
    Graph final_graph;
    std::vector<int> label_map;
};

struct ClassificationFlags {
    bool is_trimmed = false;
    bool is_generically_trimmed = false;
    bool is_type_a4 = false;
    bool is_type_b4 = false;
    int n4 = 0;
    std::vector<int> degree3_count_per_component;
};

/// Evaluates the trimmed / generically-trimmed / A4 / B4 predicates exactly.
/// The empty graph satisfies all of them vacuously.
inline ClassificationFlags classify(const Graph& g) {
    ClassificationFlags f;
    auto deg = g.degrees();
    int min_deg = deg.empty() ? 3 : *std::min_element(deg.begin(), deg.end());
    bool degrees_3_4 = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3 || d == 4; });
    f.n4 = static_cast<int>(std::count(deg.begin(), deg.end(), 4));

    auto label = g.component_labels();
    int comps = g.component_count();
    f.degree3_count_per_component.assign(comps, 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (deg[v] == 3) ++f.degree3_count_per_component[label[v]];

    bool no_small_cut = !find_minimal_cut(g, 2).has_value();
    f.is_trimmed = min_deg >= 3 && no_small_cut;
    // On a trimmed graph the spread-cut scan only ever reports 3-cuts whose
    // edges share no common vertex.
    f.is_generically_trimmed =
        f.is_trimmed && !find_minimal_cut(g, 3, /*require_no_common_vertex=*/true).has_value();

    bool one_deg3_each = std::all_of(f.degree3_count_per_component.begin(),
                                     f.degree3_count_per_component.end(),
                                     [](int c) { return c >= 1; });
    bool four_deg3_each = std::all_of(f.degree3_count_per_component.begin(),
                                      f.degree3_count_per_component.end(),
                                      [](int c) { return c >= 4; });
    f.is_type_a4 = degrees_3_4 && one_deg3_each && f.is_trimmed;
    f.is_type_b4 = degrees_3_4 && four_deg3_each && f.is_generically_trimmed;
    return f;
}

namespace detail {

inline std::vector<Edge> incident_edges(const Graph& g, int v) {
    std::vector<Edge> out;
    for (const auto& e : g.edges())
        if (e.first == v || e.second == v) out.push_back(e);
    return out;
}

inline TrimTrace run_trim(const Graph& g, bool generic) {
    TrimTrace trace;
    trace.initial_graph = g;
    Graph cur = g;
    std::vector<int> orig(cur.vertex_count());
    for (int i = 0; i < cur.vertex_count(); ++i) orig[i] = i;

    for (;;) {
        // rule (1): lowest-index vertex of degree <= 2
        auto deg = cur.degrees();
        int low = -1;
        for (int v = 0; v < cur.vertex_count(); ++v)
            if (deg[v] <= 2) {
                low = v;
                break;
            }
        if (low >= 0) {
            TrimStep step;
            step.kind = TrimStepKind::DeleteLowDegreeVertex;
            step.degree_at_removal = deg[low];
            step.removed_vertices = {orig[low]};
            for (const auto& [a, b] : incident_edges(cur, low))
                step.removed_edges.push_back(make_edge(orig[a], orig[b]));
            trace.steps.push_back(std::move(step));
            std::vector<int> old_of_new;
            cur = cur.delete_vertex(low, &old_of_new);
            std::vector<int> next;
            for (int i : old_of_new) next.push_back(orig[i]);
            orig = std::move(next);
            continue;
        }
        // rule (2): lexicographically smallest minimal cut of size <= 2
        if (auto cut = find_minimal_cut(cur, 2)) {
            TrimStep step;
            step.kind = TrimStepKind::RemoveSmallCut;
            for (const auto& [a, b] : cut->edges_removed)
                step.removed_edges.push_back(make_edge(orig[a], orig[b]));
            trace.steps.push_back(std::move(step));
            cur = cur.delete_edges(cut->edges_removed);
            continue;
        }
        if (!generic) break;
        // rule (3): minimal 3-cut whose edges share no common vertex
        if (auto cut = find_minimal_cut(cur, 3, /*require_no_common_vertex=*/true)) {
            TrimStep step;
            step.kind = TrimStepKind::RemoveSpreadThreeCut;
            for (const auto& [a, b] : cut->edges_removed)
                step.removed_edges.push_back(make_edge(orig[a], orig[b]));
            trace.steps.push_back(std::move(step));
            cur = cur.delete_edges(cut->edges_removed);
            continue;
        }
        break;
    }
    trace.final_graph = cur;
    trace.label_map = orig;
    return trace;
}

}  // namespace detail

/// Trimming process: apply rule (1), else rule (2), until trimmed.
/// Deterministic (lowest-index vertex, lexicographic cuts).
inline TrimTrace trim(const Graph& g) { return detail::run_trim(g, false); }

/// Generic trimming: rules (1)/(2) plus rule (3) on trimmed intermediates.
inline TrimTrace generic_trim(const Graph& g) { return detail::run_trim(g, true); }

/// Re-applies the trace's steps to its initial graph (in original labels) and
/// checks the result matches final_graph under label_map.
inline bool replay_matches(const TrimTrace& trace) {
    const Graph& g0 = trace.initial_graph;
    std::vector<bool> vertex_alive(g0.vertex_count(), true);
    std::vector<Edge> edges = g0.edges();
    auto drop_edge = [&](const Edge& e) {
        auto it = std::find(edges.begin(), edges.end(), e);
        if (it == edges.end()) return false;
        edges.erase(it);
        return true;
    };
    for (const auto& step : trace.steps) {
        for (int v : step.removed_vertices) {
            if (v < 0 || v >= g0.vertex_count() || !vertex_alive[v]) return false;
            vertex_alive[v] = false;
        }
        for (const auto& e : step.removed_edges)
            if (!drop_edge(e)) return false;
        for (const auto& [a, b] : edges)
            if (!vertex_alive[a] || !vertex_alive[b]) return false;
    }
    // Surviving vertex set must equal label_map.
    std::vector<int> alive;
    for (int v = 0; v < g0.vertex_count(); ++v)
        if (vertex_alive[v]) alive.push_back(v);
    if (alive != trace.label_map) return false;
    if (static_cast<int>(alive.size()) != trace.final_graph.vertex_count()) return false;
    std::vector<Edge> expected;
    for (const auto& [a, b] : trace.final_graph.edges())
        expected.push_back(make_edge(trace.label_map[a], trace.label_map[b]));
    std::sort(expected.begin(), expected.end());
    std::sort(edges.begin(), edges.end());
    return edges == expected;
}

struct no_missing_pair_error : std::domain_error {
    no_missing_pair_error() : std::domain_error("all neighbor pairs already adjacent") {}
};

/// Reverse one-extension: delete the degree-3 vertex t and join the
/// lexicographically smallest non-adjacent pair among its neighbors. Indices
/// are compacted as in delete_vertex.
inline Graph reverse_one_extension(const Graph& g, int t, std::vector<int>* old_of_new = nullptr) {
    if (g.degree(t) != 3) throw std::invalid_argument("reverse_one_extension needs degree(t) == 3");
    auto nb = g.neighbors(t);
    std::optional<Edge> missing;
    for (int i = 0; i < 3 && !missing; ++i)
        for (int j = i + 1; j < 3 && !missing; ++j)
            if (!g.has_edge(nb[i], nb[j])) missing = make_edge(nb[i], nb[j]);
    if (!missing) throw no_missing_pair_error();
    return g.add_edge(missing->first, missing->second).delete_vertex(t, old_of_new);
}

}  // namespace rigidrank
