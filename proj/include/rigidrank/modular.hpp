#pragma once

#include "rigidrank/graph.hpp"
#include "rigidrank/rational.hpp"
#include "rigidrank/rigidity.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace rigidrank {
namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

inline u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs with these bases.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline u64 random_prime_62(std::mt19937_64& rng) {
    std::uniform_int_distribution<u64> dist(u64(1) << 61, (u64(1) << 62) - 1);
    for (;;) {
        u64 c = dist(rng) | 1;
        if (is_prime(c)) return c;
    }
}

inline u64 to_mod(const Int& v, u64 p) {
    Int r = v % Int(p);
    if (r < 0) r += Int(p);
    return static_cast<u64>(r);
}

/// Gaussian elimination rank over GF(p). Destroys its argument.
inline int modular_rank(std::vector<std::vector<u64>>& m, u64 p) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] % p != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        u64 inv = powmod(m[rank][col] % p, p - 2, p);
        for (int r = rank + 1; r < rows; ++r) {
            u64 factor = mulmod(m[r][col] % p, inv, p);
            if (factor == 0) continue;
            for (int c = col; c < cols; ++c) {
                u64 sub = mulmod(factor, m[rank][c] % p, p);
                m[r][c] = (m[r][c] % p + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

/// Rigidity-matrix rank over GF(p) for integer coordinates.
inline int modular_rigidity_rank(const Graph& g, const std::vector<std::pair<long long, long long>>& pts,
                                 u64 p) {
    const int m = g.edge_count();
    const int cols = 2 * g.vertex_count();
    std::vector<std::vector<u64>> a(m, std::vector<u64>(cols, 0));
    auto norm = [&](long long v) -> u64 {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return static_cast<u64>(r);
    };
    for (int r = 0; r < m; ++r) {
        auto [i, j] = g.edges()[r];
        long long dx = pts[i].first - pts[j].first;
        long long dy = pts[i].second - pts[j].second;
        a[r][2 * i] = norm(dx);
        a[r][2 * i + 1] = norm(dy);
        a[r][2 * j] = norm(-dx);
        a[r][2 * j + 1] = norm(-dy);
    }
    return modular_rank(a, p);
}

}  // namespace detail

constexpr int kDefaultGenericTrials = 5;
constexpr long long kGenericCoordinateRange = 1LL << 20;

/// Monte-Carlo estimate of the generic rank r(G): maximum over trials of the
/// rigidity-matrix rank at a random integer configuration, computed modulo a
/// fresh random 62-bit prime. Each trial is a certified lower bound on r(G);
/// the estimate is flagged certified when it reaches the Laman ceiling
/// min(|E|, 2|V|-3). Deterministic per (seed, trials) regardless of schedule.
inline RankResult generic_rank(const Graph& g, int trials = kDefaultGenericTrials,
                               std::uint64_t seed = 0) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    int best = 0;
    for (int t = 0; t < trials && m > 0; ++t) {
        auto rng = make_rng(seed, 0x7261000 + static_cast<std::uint64_t>(t));
        detail::u64 p = detail::random_prime_62(rng);
        std::uniform_int_distribution<long long> coord(-kGenericCoordinateRange,
                                                       kGenericCoordinateRange);
        std::vector<std::pair<long long, long long>> pts(n);
        for (auto& pt : pts) pt = {coord(rng), coord(rng)};
        best = std::max(best, detail::modular_rigidity_rank(g, pts, p));
    }
    RankResult res;
    res.rank = best;
    res.stress_count = m - best;
    res.method = RankMethod::GenericEstimate;
    res.trials = trials;
    const int ceiling = std::min(m, std::max(0, 2 * n - 3));
    res.certified = (best == ceiling);
    return res;
}

/// Random integer configuration with coordinates in the generic sampling
/// range, as exact rationals (for matched exact/modular comparisons).
inline Configuration random_integer_configuration(int n, std::uint64_t seed) {
    auto rng = make_rng(seed, 0x636667);
    std::uniform_int_distribution<long long> coord(-kGenericCoordinateRange,
                                                   kGenericCoordinateRange);
    Configuration p;
    for (int i = 0; i < n; ++i) p.points.push_back({Rational(coord(rng)), Rational(coord(rng))});
    return p;
}

}  // namespace rigidrank
