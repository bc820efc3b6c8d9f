#pragma once

#include "rigidrank/graph.hpp"
#include "rigidrank/rational.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigidrank {

struct Point {
    Rational x, y;
    bool operator==(const Point&) const = default;
};

/// One exact rational point per vertex.
struct Configuration {
    std::vector<Point> points;
    int size() const { return static_cast<int>(points.size()); }
};

/// |E| x 2|V| first-order rigidity matrix. Row for edge (i,j), i<j, carries
/// (x_i-x_j, y_i-y_j) in columns (2i, 2i+1) and the negation in (2j, 2j+1);
/// rows are sorted by edge.
struct RigidityMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Edge> row_order;
    std::vector<std::vector<Rational>> entries;
};

enum class RankMethod { ExactAtConfiguration, GenericEstimate };

struct RankResult {
    int rank = 0;
    int stress_count = 0;  // |E| - rank
    RankMethod method = RankMethod::ExactAtConfiguration;
    int trials = 0;        // estimates only
    bool certified = false;  // estimate proven exact (Laman ceiling attained)
};

inline RigidityMatrix build_rigidity_matrix(const Graph& g, const Configuration& p) {
    if (p.size() != g.vertex_count())
        throw std::invalid_argument("configuration size does not match vertex count");
    RigidityMatrix rm;
    rm.rows = g.edge_count();
    rm.cols = 2 * g.vertex_count();
    rm.row_order = g.edges();
    rm.entries.assign(rm.rows, std::vector<Rational>(rm.cols, Rational(0)));
    for (int r = 0; r < rm.rows; ++r) {
        auto [i, j] = rm.row_order[r];
        Rational dx = p.points[i].x - p.points[j].x;
        Rational dy = p.points[i].y - p.points[j].y;
        rm.entries[r][2 * i] = dx;
        rm.entries[r][2 * i + 1] = dy;
        rm.entries[r][2 * j] = -dx;
        rm.entries[r][2 * j + 1] = -dy;
    }
    return rm;
}

namespace detail {

/// Fraction-free (Bareiss) rank of an integer matrix. Destroys its argument.
inline int bareiss_rank(std::vector<std::vector<Int>>& m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const Int& pv = m[rank][col];
        for (int r = rank + 1; r < rows; ++r) {
            // Rows with a zero in the pivot column still get rescaled; entries
            // must stay k x k minors for the exact divisions to hold.
            for (int c = col + 1; c < cols; ++c)
                m[r][c] = (pv * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = pv;
        ++rank;
    }
    return rank;
}

/// Clears denominators row by row (rank-preserving) and transposes when that
/// makes the elimination shorter.
inline int rational_rank(const std::vector<std::vector<Rational>>& a) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(a[0].size());
    std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
    for (int r = 0; r < rows; ++r) {
        Int lcm = 1;
        for (const auto& q : a[r]) {
            Int d = denominator(q);
            lcm = lcm / gcd(lcm, d) * d;
        }
        for (int c = 0; c < cols; ++c)
            m[r][c] = numerator(a[r][c]) * (lcm / denominator(a[r][c]));
    }
    if (cols < rows) {
        std::vector<std::vector<Int>> t(cols, std::vector<Int>(rows));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) t[c][r] = std::move(m[r][c]);
        return bareiss_rank(t);
    }
    return bareiss_rank(m);
}

}  // namespace detail

/// Exact rank of the rigidity matrix at configuration p.
inline RankResult rank_at(const Graph& g, const Configuration& p) {
    auto rm = build_rigidity_matrix(g, p);
    RankResult res;
    res.rank = detail::rational_rank(rm.entries);
    res.stress_count = g.edge_count() - res.rank;
    res.method = RankMethod::ExactAtConfiguration;
    return res;
}

/// True iff no three points are collinear (every triple affinely independent).
inline bool is_general_position(const Configuration& p) {
    const int n = p.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Rational det = (p.points[j].x - p.points[i].x) * (p.points[k].y - p.points[i].y) -
                               (p.points[j].y - p.points[i].y) * (p.points[k].x - p.points[i].x);
                if (det == 0) return false;
            }
    return true;
}

/// Random configuration guaranteed to be in general position: distinct moment
/// curve parameters (t, t^2), each point then perturbed by a small random
/// rational and the result re-verified. Coordinates stay small so downstream
/// exact elimination stays fast.
inline Configuration sample_general_position(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative point count");
    auto rng = make_rng(seed, 0x6770);
    const long long span = 50LL * n + 50;
    std::uniform_int_distribution<long long> tdist(-span, span);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(11, 97);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<long long> ts;
        while (static_cast<int>(ts.size()) < n) {
            long long t = tdist(rng);
            if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
        }
        Configuration p;
        for (long long t : ts) {
            Rational x = Rational(t) + Rational(num(rng), den(rng));
            Rational y = Rational(t) * Rational(t) + Rational(num(rng), den(rng));
            p.points.push_back({x, y});
        }
        if (is_general_position(p)) return p;
    }
    throw std::runtime_error("sample_general_position: retry budget exhausted");
}

/// Configuration text format: one line "x y" per vertex, coordinates integer
/// or "num/den".
inline void write_configuration(std::ostream& os, const Configuration& p) {
    for (const auto& pt : p.points)
        os << format_rational(pt.x) << " " << format_rational(pt.y) << "\n";
}

inline Configuration read_configuration(std::istream& is) {
    Configuration p;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string xs, ys;
        if (!(ls >> xs >> ys)) throw parse_error(lineno, "expected \"x y\"");
        try {
            p.points.push_back({parse_rational(xs), parse_rational(ys)});
        } catch (const std::invalid_argument& e) {
            throw parse_error(lineno, e.what());
        }
    }
    return p;
}

/// Restricts p to the vertices listed in old_of_new (a delete_vertex mapping).
inline Configuration restrict_configuration(const Configuration& p,
                                            const std::vector<int>& old_of_new) {
    Configuration out;
    for (int v : old_of_new) out.points.push_back(p.points.at(v));
    return out;
}

}  // namespace rigidrank
