#pragma once

#include "rigidrank/graph.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace rigidrank {

/// A connectivity value that may be capped: value < cap is exact, value == cap
/// means "at least cap".
struct ConnectivityValue {
    int value;
    int cap;
    bool at_least_cap() const { return value >= cap; }
    bool operator==(const ConnectivityValue&) const = default;
};

/// Witness for an edge cut: removing edges_removed raises the component count.
struct CutWitness {
    std::vector<Edge> edges_removed;  // sorted
    int components_before = 0;
    int components_after = 0;
    bool minimal = false;  // no proper subset increases the component count
};

namespace detail {

// Residual unit-capacity digraph for capped augmenting-path searches.
struct FlowNet {
    struct Arc {
        int to, cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;

    explicit FlowNet(int n) : out(n) {}

    void add_arc(int from, int to, int cap) {
        out[from].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({to, cap});
        out[to].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({from, 0});
    }

    // Augments unit flows s -> t until `limit` paths found or none remain.
    int max_flow(int s, int t, int limit) {
        int flow = 0;
        std::vector<int> parent_arc(out.size());
        while (flow < limit) {
            std::fill(parent_arc.begin(), parent_arc.end(), -1);
            std::queue<int> q;
            q.push(s);
            parent_arc[s] = -2;
            while (!q.empty() && parent_arc[t] == -1) {
                int v = q.front();
                q.pop();
                for (int a : out[v]) {
                    if (arcs[a].cap > 0 && parent_arc[arcs[a].to] == -1) {
                        parent_arc[arcs[a].to] = a;
                        q.push(arcs[a].to);
                    }
                }
            }
            if (parent_arc[t] == -1) break;
            for (int v = t; v != s;) {
                int a = parent_arc[v];
                arcs[a].cap -= 1;
                arcs[a ^ 1].cap += 1;
                v = arcs[a ^ 1].to;
            }
            ++flow;
        }
        return flow;
    }
};

// Number of edge-disjoint s-t paths, capped at `limit`.
inline int edge_disjoint_paths(const Graph& g, int s, int t, int limit) {
    FlowNet net(g.vertex_count());
    for (const auto& [u, v] : g.edges()) {
        net.add_arc(u, v, 1);
        net.add_arc(v, u, 1);
    }
    return net.max_flow(s, t, limit);
}

// Number of internally vertex-disjoint s-t paths, capped (s, t non-adjacent).
inline int vertex_disjoint_paths(const Graph& g, int s, int t, int limit) {
    const int n = g.vertex_count();
    // v_in = v, v_out = v + n
    FlowNet net(2 * n);
    for (int v = 0; v < n; ++v) net.add_arc(v, v + n, v == s || v == t ? limit : 1);
    for (const auto& [u, v] : g.edges()) {
        net.add_arc(u + n, v, 1);
        net.add_arc(v + n, u, 1);
    }
    return net.max_flow(s + n, t, limit);
}

// Smallest edge-cut size within one connected graph, capped.
inline int edge_connectivity_connected(const Graph& g, int cap) {
    if (g.vertex_count() <= 1) return cap;
    int best = cap;
    for (int t = 1; t < g.vertex_count() && best > 0; ++t)
        best = std::min(best, edge_disjoint_paths(g, 0, t, best));
    return best;
}

inline bool edges_share_common_vertex(const std::vector<Edge>& es) {
    if (es.empty()) return true;
    for (int v : {es[0].first, es[0].second}) {
        bool all = true;
        for (const auto& [a, b] : es)
            if (a != v && b != v) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

/// Bridges of g with two edges removed (iterative Tarjan low-link).
inline std::vector<Edge> bridges_without(const Graph& g, const Edge& skip1, const Edge& skip2) {
    const int n = g.vertex_count();
    struct Half {
        int to, id;
    };
    std::vector<std::vector<Half>> adj(n);
    int id = 0;
    for (const auto& e : g.edges()) {
        if (e == skip1 || e == skip2) {
            ++id;
            continue;
        }
        adj[e.first].push_back({e.second, id});
        adj[e.second].push_back({e.first, id});
        ++id;
    }
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> out;
    int timer = 0;
    struct Frame {
        int v, parent_edge;
        size_t next = 0;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        stack.push_back({root, -1});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                Half h = adj[f.v][f.next++];
                if (h.id == f.parent_edge) continue;
                if (disc[h.to] == -1) {
                    disc[h.to] = low[h.to] = timer++;
                    stack.push_back({h.to, h.id});
                } else {
                    low[f.v] = std::min(low[f.v], disc[h.to]);
                }
            } else {
                int v = f.v;
                stack.pop_back();
                if (!stack.empty()) {
                    int u = stack.back().v;
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] > disc[u]) out.push_back(make_edge(u, v));
                }
            }
        }
    }
    return out;
}

inline int component_count_without(const Graph& g, const std::vector<Edge>& removed) {
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (const auto& e : g.edges()) {
        if (std::find(removed.begin(), removed.end(), e) != removed.end()) continue;
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    std::vector<int> seen(g.vertex_count(), 0);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        ++c;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return c;
}

}  // namespace detail

/// Exact edge connectivity, capped. Requires a connected nonempty graph.
inline ConnectivityValue edge_connectivity(const Graph& g, int cap) {
    if (cap < 1 || cap > 8) throw std::invalid_argument("edge_connectivity cap must be in 1..8");
    if (!g.is_connected()) throw std::invalid_argument("edge_connectivity requires a connected graph");
    return {detail::edge_connectivity_connected(g, cap), cap};
}

/// Exact vertex connectivity (size of a smallest separating vertex set),
/// capped. Complete graphs have no separator and report "at least cap".
inline ConnectivityValue vertex_connectivity(const Graph& g, int cap) {
    if (cap < 1 || cap > 5) throw std::invalid_argument("vertex_connectivity cap must be in 1..5");
    if (!g.is_connected()) throw std::invalid_argument("vertex_connectivity requires a connected graph");
    const int n = g.vertex_count();
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (g.edge_count() == pairs) return {cap, cap};  // complete
    // A separator smaller than deg(v0)+1 misses some vertex of {v0} u N(v0).
    int v0 = 0;
    auto deg = g.degrees();
    for (int v = 1; v < n; ++v)
        if (deg[v] < deg[v0]) v0 = v;
    std::vector<int> sources = g.neighbors(v0);
    sources.insert(sources.begin(), v0);
    int best = cap;
    for (int s : sources) {
        for (int t = 0; t < n && best > 0; ++t) {
            if (t == s || g.has_edge(s, t)) continue;
            best = std::min(best, detail::vertex_disjoint_paths(g, s, t, best));
        }
    }
    return {best, cap};
}

/// Lexicographically smallest minimal edge cut of size <= max_size, or nullopt.
/// With require_no_common_vertex, size-3 candidates whose edges all meet in one
/// vertex are skipped (sizes 1 and 2 are unaffected). Works per component on
/// disconnected input; "cut" means any edge set raising the component count.
inline std::optional<CutWitness> find_minimal_cut(const Graph& g, int max_size,
                                                  bool require_no_common_vertex = false) {
    if (max_size < 1 || max_size > 3) throw std::invalid_argument("max_size must be 1..3");
    const int before = g.component_count();
    if (g.edge_count() == 0) return std::nullopt;

    // Smallest cut size over components; skip the subset scan when it exceeds max_size.
    auto label = g.component_labels();
    int comps = before;
    int lambda = max_size + 1;
    for (int c = 0; c < comps; ++c) {
        std::vector<int> old_of_new;
        std::vector<int> new_of_old(g.vertex_count(), -1);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (label[v] == c) {
                new_of_old[v] = static_cast<int>(old_of_new.size());
                old_of_new.push_back(v);
            }
        std::vector<Edge> ce;
        for (const auto& [u, v] : g.edges())
            if (label[u] == c) ce.push_back({new_of_old[u], new_of_old[v]});
        Graph comp(static_cast<int>(old_of_new.size()), std::move(ce));
        lambda = std::min(lambda, detail::edge_connectivity_connected(comp, lambda));
    }
    if (lambda > max_size) return std::nullopt;

    // Any disconnecting set of the minimum size is automatically minimal.
    const auto& es = g.edges();
    const int m = g.edge_count();
    auto witness = [&](std::vector<Edge> F) -> std::optional<CutWitness> {
        int after = detail::component_count_without(g, F);
        if (after <= before) return std::nullopt;
        return CutWitness{std::move(F), before, after, true};
    };
    if (lambda == 1) {
        for (int i = 0; i < m; ++i)
            if (auto w = witness({es[i]})) return w;
    } else if (lambda == 2) {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (auto w = witness({es[i], es[j]})) return w;
    } else {
        // lambda == 3: no pair disconnects, so {e_i, e_j, b} is a (minimal)
        // 3-cut exactly when b is a bridge of g - {e_i, e_j}. Enumerating
        // pairs plus a bridge pass is quadratic instead of cubic.
        std::optional<std::vector<Edge>> best;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                for (const Edge& b : detail::bridges_without(g, es[i], es[j])) {
                    std::vector<Edge> F{es[i], es[j], b};
                    std::sort(F.begin(), F.end());
                    if (require_no_common_vertex && detail::edges_share_common_vertex(F)) continue;
                    if (!best || F < *best) best = std::move(F);
                }
            }
        if (best)
            if (auto w = witness(std::move(*best))) return w;
    }
    return std::nullopt;
}

}  // namespace rigidrank
