#pragma once

#include "rigidrank/connectivity.hpp"
#include "rigidrank/graph.hpp"
#include "rigidrank/rational.hpp"
#include "rigidrank/rigidity.hpp"

#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigidrank {

inline Graph complete_graph(int l) {
    if (l < 1) throw std::invalid_argument("complete_graph needs l >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) edges.push_back({i, j});
    return Graph(l, std::move(edges));
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, std::move(edges));
}

/// k copies of K5 with one edge removed each, connected in a single loop: in
/// copy i (vertices 5i..5i+4) the edge (5i, 5i+1) is dropped and the connector
/// (5i+1, 5(i+1 mod k)) restores 4-regularity. 5k vertices, 10k edges.
inline Graph chained_k5_minus_edge(int k) {
    if (k < 2) throw std::invalid_argument("chained_k5_minus_edge needs k >= 2");
    std::vector<Edge> edges;
    for (int c = 0; c < k; ++c) {
        int base = 5 * c;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (!(i == 0 && j == 1)) edges.push_back({base + i, base + j});
        edges.push_back(make_edge(base + 1, 5 * ((c + 1) % k)));
    }
    return Graph(5 * k, std::move(edges));
}

/// Ring of k copies of K4. For k >= 3 copy i (vertices 4i..4i+3) sends two
/// connectors (4i+2, 4(i+1)) and (4i+3, 4(i+1)+1) to the next copy; for k = 2
/// the copies are joined by a perfect matching (K4 x K2). 4-regular and
/// 4-edge-connected.
inline Graph chained_k4(int k) {
    if (k < 2) throw std::invalid_argument("chained_k4 needs k >= 2");
    std::vector<Edge> edges;
    for (int c = 0; c < k; ++c) {
        int base = 4 * c;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) edges.push_back({base + i, base + j});
    }
    if (k == 2) {
        for (int i = 0; i < 4; ++i) edges.push_back({i, 4 + i});
    } else {
        for (int c = 0; c < k; ++c) {
            int next = 4 * ((c + 1) % k);
            edges.push_back(make_edge(4 * c + 2, next));
            edges.push_back(make_edge(4 * c + 3, next + 1));
        }
    }
    return Graph(4 * k, std::move(edges));
}

/// K3 x C_n prism tube: 3n vertices, 4-regular, 4-edge-connected.
inline Graph k3_prism(int n) {
    if (n < 3) throw std::invalid_argument("k3_prism needs n >= 3");
    return cartesian_product(complete_graph(3), cycle(n));
}

/// d-regular simple graph via the pairing model with rejection. Optionally
/// rejects until connected and/or k-edge-connected. Deterministic per seed.
inline Graph random_regular(int d, int n, std::uint64_t seed, bool require_connected = false,
                            std::optional<int> require_edge_connectivity = std::nullopt) {
    if (d < 0 || n < 0 || (static_cast<long long>(d) * n) % 2 != 0)
        throw std::invalid_argument("random_regular needs d*n even");
    if (d >= n) throw std::invalid_argument("random_regular needs d < n");
    auto rng = make_rng(seed, 0x7272);
    for (int attempt = 0; attempt < 5000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<size_t>(d) * n);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<Edge> edges;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b) ok = false;
            else {
                Edge e = make_edge(a, b);
                if (std::find(edges.begin(), edges.end(), e) != edges.end()) ok = false;
                else edges.push_back(e);
            }
        }
        if (!ok) continue;
        Graph g(n, std::move(edges));
        if ((require_connected || require_edge_connectivity) && !g.is_connected()) continue;
        if (require_edge_connectivity) {
            int k = *require_edge_connectivity;
            if (edge_connectivity(g, std::min(k + 1, 8)).value < k) continue;
        }
        return g;
    }
    throw std::runtime_error("random_regular: rejection budget exceeded");
}

/// Product configuration p(u1,u2) = a*p1(u1) + b*p2(u2) in the product's
/// row-major vertex order, with random nonzero rational a, b resampled until
/// the result is in general position.
inline Configuration product_configuration(const Graph& g1, const Configuration& p1,
                                           const Graph& g2, const Configuration& p2,
                                           std::uint64_t seed) {
    if (!g1.is_connected() || !g2.is_connected())
        throw std::invalid_argument("product_configuration needs connected factors");
    if (p1.size() != g1.vertex_count() || p2.size() != g2.vertex_count())
        throw std::invalid_argument("configuration size mismatch");
    if (!is_general_position(p1) || !is_general_position(p2))
        throw std::invalid_argument("factor configurations must be in general position");
    auto rng = make_rng(seed, 0x7063);
    std::uniform_int_distribution<int> num(1, 100), den(1, 100), sign(0, 1);
    for (int attempt = 0; attempt < 50; ++attempt) {
        Rational a(num(rng) * (sign(rng) ? 1 : -1), den(rng));
        Rational b(num(rng) * (sign(rng) ? 1 : -1), den(rng));
        Configuration p;
        for (int u1 = 0; u1 < g1.vertex_count(); ++u1)
            for (int u2 = 0; u2 < g2.vertex_count(); ++u2)
                p.points.push_back({a * p1.points[u1].x + b * p2.points[u2].x,
                                    a * p1.points[u1].y + b * p2.points[u2].y});
        if (is_general_position(p)) return p;
    }
    throw std::runtime_error("product_configuration: retry budget exhausted");
}

/// Parsed family descriptor, e.g. "chained-k5me:k=3", "k3-prism:n=3..8",
/// "random-regular:d=4,n=20,seed=7". Integer parameters accept "a..b" ranges;
/// instances() enumerates them.
struct FamilySpec {
    std::string family;
    std::map<std::string, std::pair<long long, long long>> params;  // name -> [lo, hi]

    static FamilySpec parse(const std::string& text) {
        FamilySpec spec;
        auto colon = text.find(':');
        spec.family = text.substr(0, colon);
        if (colon != std::string::npos) {
            std::stringstream rest(text.substr(colon + 1));
            std::string item;
            while (std::getline(rest, item, ',')) {
                auto eq = item.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("family parameter must be key=value: " + item);
                std::string key = item.substr(0, eq), val = item.substr(eq + 1);
                long long lo, hi;
                auto dots = val.find("..");
                try {
                    if (dots == std::string::npos) {
                        lo = hi = std::stoll(val);
                    } else {
                        lo = std::stoll(val.substr(0, dots));
                        hi = std::stoll(val.substr(dots + 2));
                    }
                } catch (const std::exception&) {
                    throw std::invalid_argument("bad integer parameter: " + item);
                }
                if (hi < lo) throw std::invalid_argument("empty range: " + item);
                spec.params[key] = {lo, hi};
            }
        }
        return spec;
    }

    long long get(const std::string& key, std::optional<long long> fallback = std::nullopt) const {
        auto it = params.find(key);
        if (it == params.end()) {
            if (fallback) return *fallback;
            throw std::invalid_argument("family '" + family + "' needs parameter '" + key + "'");
        }
        return it->second.first;
    }

    /// Expands parameter ranges into single-valued specs (cross product, in
    /// key order).
    std::vector<FamilySpec> instances() const {
        std::vector<FamilySpec> out{FamilySpec{family, {}}};
        for (const auto& [key, range] : params) {
            std::vector<FamilySpec> next;
            for (const auto& base : out)
                for (long long v = range.first; v <= range.second; ++v) {
                    FamilySpec s = base;
                    s.params[key] = {v, v};
                    next.push_back(std::move(s));
                }
            out = std::move(next);
        }
        return out;
    }

    /// Builds the graph for a single-valued spec.
    Graph build() const {
        if (family == "complete") return complete_graph(static_cast<int>(get("l")));
        if (family == "cycle") return cycle(static_cast<int>(get("n")));
        if (family == "chained-k5me") return chained_k5_minus_edge(static_cast<int>(get("k")));
        if (family == "chained-k4") return chained_k4(static_cast<int>(get("k")));
        if (family == "k3-prism") return k3_prism(static_cast<int>(get("n")));
        if (family == "cartesian-product")
            return cartesian_product(complete_graph(static_cast<int>(get("l"))),
                                     cycle(static_cast<int>(get("n"))));
        if (family == "random-regular")
            return random_regular(static_cast<int>(get("d")), static_cast<int>(get("n")),
                                  static_cast<std::uint64_t>(get("seed", 0)),
                                  /*require_connected=*/true);
        throw std::invalid_argument("unknown family: '" + family + "'");
    }
};

}  // namespace rigidrank
