#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rigidrank {

/// Undirected edge, kept canonical as first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("self-loop edge (" + std::to_string(a) + ")");
    return a < b ? Edge{a, b} : Edge{b, a};
}

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// Simple finite undirected graph: a vertex count plus a sorted edge set.
/// Immutable after construction; all mutating operations return new graphs.
class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
        if (n_ < 0) throw std::invalid_argument("negative vertex count");
        for (auto& e : edges_) e = make_edge(e.first, e.second);
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("duplicate edge (multigraphs not supported)");
        for (const auto& [u, v] : edges_)
            if (u < 0 || v >= n_)
                throw std::out_of_range("edge endpoint out of range");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int a, int b) const {
        if (a == b) return false;
        return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index " + std::to_string(v));
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (const auto& [u, w] : edges_)
            if (u == v || w == v) ++d;
        return d;
    }

    std::vector<int> degrees() const {
        std::vector<int> d(n_, 0);
        for (const auto& [u, w] : edges_) {
            ++d[u];
            ++d[w];
        }
        return d;
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(n_);
        for (const auto& [u, w] : edges_) {
            adj[u].push_back(w);
            adj[w].push_back(u);
        }
        return adj;
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (const auto& [u, w] : edges_) {
            if (u == v) out.push_back(w);
            if (w == v) out.push_back(u);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Component label per vertex (labels are 0..c-1 in order of first vertex).
    std::vector<int> component_labels() const {
        std::vector<int> label(n_, -1);
        auto adj = adjacency();
        int c = 0;
        std::vector<int> stack;
        for (int s = 0; s < n_; ++s) {
            if (label[s] != -1) continue;
            label[s] = c;
            stack.push_back(s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : adj[v])
                    if (label[w] == -1) {
                        label[w] = c;
                        stack.push_back(w);
                    }
            }
            ++c;
        }
        return label;
    }

    int component_count() const {
        auto label = component_labels();
        return label.empty() ? 0 : 1 + *std::max_element(label.begin(), label.end());
    }

    bool is_connected() const { return n_ > 0 && component_count() == 1; }

    /// Deletes v and its incident edges, compacting indices. old_of_new[i] gives
    /// the original index of new vertex i.
    Graph delete_vertex(int v, std::vector<int>* old_of_new = nullptr) const {
        check_vertex(v);
        std::vector<Edge> kept;
        for (const auto& [u, w] : edges_) {
            if (u == v || w == v) continue;
            kept.push_back({u > v ? u - 1 : u, w > v ? w - 1 : w});
        }
        if (old_of_new) {
            old_of_new->clear();
            for (int i = 0; i < n_; ++i)
                if (i != v) old_of_new->push_back(i);
        }
        return Graph(n_ - 1, std::move(kept));
    }

    Graph delete_edges(const std::vector<Edge>& removed) const {
        std::vector<Edge> rm;
        for (const auto& [a, b] : removed) {
            Edge e = make_edge(a, b);
            if (!has_edge(e.first, e.second))
                throw std::out_of_range("edge not in graph: (" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ")");
            rm.push_back(e);
        }
        std::sort(rm.begin(), rm.end());
        std::vector<Edge> kept;
        std::set_difference(edges_.begin(), edges_.end(), rm.begin(), rm.end(),
                            std::back_inserter(kept));
        return Graph(n_, std::move(kept));
    }

    Graph add_edge(int a, int b) const {
        Edge e = make_edge(a, b);
        check_vertex(a);
        check_vertex(b);
        if (has_edge(a, b)) throw std::invalid_argument("edge already present");
        auto es = edges_;
        es.push_back(e);
        return Graph(n_, std::move(es));
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// Cartesian product; vertex (u1, u2) maps to index u1 * |V2| + u2.
inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() == 0 || g2.vertex_count() == 0)
        throw std::invalid_argument("cartesian product of empty graph");
    const int n2 = g2.vertex_count();
    std::vector<Edge> edges;
    for (int u1 = 0; u1 < g1.vertex_count(); ++u1)
        for (const auto& [a, b] : g2.edges()) edges.push_back({u1 * n2 + a, u1 * n2 + b});
    for (int u2 = 0; u2 < n2; ++u2)
        for (const auto& [a, b] : g1.edges()) edges.push_back({a * n2 + u2, b * n2 + u2});
    return Graph(g1.vertex_count() * n2, std::move(edges));
}

/// Edge-list text format: "n m" then m lines "i j", edges sorted.
inline void write_edge_list(std::ostream& os, const Graph& g) {
    os << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) os << u << " " << v << "\n";
}

inline std::string edge_list_string(const Graph& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

inline Graph read_edge_list(std::istream& is) {
    std::string line;
    int lineno = 0;
    auto next_line = [&]() {
        while (std::getline(is, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw parse_error(1, "missing header line \"n m\"");
    std::istringstream hdr(line);
    long long n, m;
    if (!(hdr >> n >> m) || n < 0 || m < 0) throw parse_error(lineno, "expected header \"n m\"");
    std::vector<Edge> edges;
    for (long long k = 0; k < m; ++k) {
        if (!next_line()) throw parse_error(lineno + 1, "unexpected end of file, expected edge");
        std::istringstream es(line);
        int i, j;
        if (!(es >> i >> j)) throw parse_error(lineno, "expected edge \"i j\"");
        if (!(0 <= i && i < j && j < n))
            throw parse_error(lineno, "edge must satisfy 0 <= i < j < n");
        edges.push_back({i, j});
    }
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const std::exception& e) {
        throw parse_error(lineno, e.what());
    }
}

inline void write_dot(std::ostream& os, const Graph& g, const std::string& name = "G") {
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
}

}  // namespace rigidrank
