// Independent test oracles. Everything here deliberately avoids the library's
// Bareiss / Menger code paths: ranks go through plain rational row reduction
// by the definition of linear independence, cuts through exhaustive subset
// enumeration.
#pragma once

#include "rigidrank/graph.hpp"
#include "rigidrank/rational.hpp"
#include "rigidrank/rigidity.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using rigidrank::Configuration;
using rigidrank::Edge;
using rigidrank::Graph;
using rigidrank::Rational;

/// Rank by definition: a row is counted iff it is not a rational linear
/// combination of the rows already kept (reduce against the kept basis).
inline int brute_force_rank(std::vector<std::vector<Rational>> rows) {
    std::vector<std::vector<Rational>> basis;  // reduced, with known pivot cols
    std::vector<int> pivot_col;
    for (auto& row : rows) {
        for (size_t b = 0; b < basis.size(); ++b) {
            const Rational& lead = row[pivot_col[b]];
            if (lead == 0) continue;
            Rational f = lead / basis[b][pivot_col[b]];
            for (size_t c = 0; c < row.size(); ++c) row[c] -= f * basis[b][c];
        }
        auto nz = std::find_if(row.begin(), row.end(), [](const Rational& q) { return q != 0; });
        if (nz == row.end()) continue;  // dependent
        pivot_col.push_back(static_cast<int>(nz - row.begin()));
        basis.push_back(std::move(row));
    }
    return static_cast<int>(basis.size());
}

inline int brute_force_rigidity_rank(const Graph& g, const Configuration& p) {
    return brute_force_rank(rigidrank::build_rigidity_matrix(g, p).entries);
}

inline bool disconnects(const Graph& g, const std::vector<Edge>& removed) {
    return g.delete_edges(removed).component_count() > g.component_count();
}

/// Smallest k < cap such that some k-edge subset disconnects, else nullopt.
inline std::optional<int> brute_force_edge_cut_size(const Graph& g, int cap) {
    const auto& es = g.edges();
    const int m = g.edge_count();
    for (int size = 1; size < cap; ++size) {
        std::vector<int> idx(size);
        // enumerate combinations
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (size <= m) {
            std::vector<Edge> F;
            for (int i : idx) F.push_back(es[i]);
            if (disconnects(g, F)) return size;
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == m - size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return std::nullopt;
}

/// Smallest separating vertex-set size < cap (complete graphs have none).
inline std::optional<int> brute_force_vertex_cut_size(const Graph& g, int cap) {
    if (g.vertex_count() >= 2 && g.component_count() > 1) return 0;
    const int n = g.vertex_count();
    for (int size = 1; size < cap; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            Graph h = g;
            for (int i = size - 1; i >= 0; --i) h = h.delete_vertex(idx[i]);
            if (h.vertex_count() >= 2 && h.component_count() > 1) return size;
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == n - size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return std::nullopt;
}

inline Graph random_graph(int n, double edge_prob, std::mt19937_64& rng) {
    std::bernoulli_distribution keep(edge_prob);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (keep(rng)) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

inline Graph random_tree(int n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.push_back(rigidrank::make_edge(parent(rng), v));
    }
    return Graph(n, std::move(edges));
}

inline Configuration random_rational_configuration(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-500, 500);
    std::uniform_int_distribution<int> den(1, 40);
    Configuration p;
    for (int i = 0; i < n; ++i)
        p.points.push_back({Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
    return p;
}

}  // namespace oracle
