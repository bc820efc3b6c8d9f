#pragma once

#include "rigidrank/connectivity.hpp"
#include "rigidrank/families.hpp"
#include "rigidrank/graph.hpp"
#include "rigidrank/modular.hpp"
#include "rigidrank/rational.hpp"
#include "rigidrank/rigidity.hpp"
#include "rigidrank/trimming.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace rigidrank {

struct BoundCheck {
    std::string theorem;
    Rational bound;
    bool applies = false;
    bool satisfied = true;  // vacuous when not applicable
    Rational slack;         // rank - bound, when applicable
};

struct BoundReport {
    int vertex_count = 0;
    int edge_count = 0;
    ConnectivityValue edge_conn{0, 0};
    ConnectivityValue vertex_conn{0, 0};
    std::optional<int> general_position_rank;
    int generic_rank_estimate = 0;
    bool generic_certified = false;
    bool escalated = false;  // estimate needed extra trials / an exact rank
    std::vector<BoundCheck> bounds;

    bool all_satisfied() const {
        return std::all_of(bounds.begin(), bounds.end(),
                           [](const BoundCheck& b) { return b.satisfied; });
    }

    Rational min_slack() const {
        std::optional<Rational> best;
        for (const auto& b : bounds)
            if (b.applies && (!best || b.slack < *best)) best = b.slack;
        return best.value_or(Rational(0));
    }
};

namespace detail {

inline BoundCheck make_check(const std::string& id, const Rational& bound, bool applies, int rank) {
    BoundCheck c;
    c.theorem = id;
    c.bound = bound;
    c.applies = applies;
    if (applies) {
        c.slack = Rational(rank) - bound;
        c.satisfied = c.slack >= 0;
    }
    return c;
}

}  // namespace detail

/// Evaluates the rank lower bounds applicable to g (and to g at p, when
/// given): the connected 4-valent bound 8|V|/5 - 1, the 4-edge-connected
/// bounds (7|V|-7)/4 and (5|V|-4)/3, and the vertex-connectivity corollary
/// branch. A generic estimate below a bound is inconclusive and triggers
/// escalation (more trials, then one exact rank at a random configuration)
/// before a violation is reported.
inline BoundReport check_bounds(const Graph& g, const std::optional<Configuration>& p,
                                std::uint64_t seed) {
    BoundReport rep;
    const int n = g.vertex_count();
    rep.vertex_count = n;
    rep.edge_count = g.edge_count();
    if (p && !is_general_position(*p))
        throw std::invalid_argument("configuration not in general position");

    auto deg = g.degrees();
    bool four_valent = n > 0 && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 4; });
    bool connected = g.is_connected();
    bool applicable = connected && four_valent;

    if (connected) {
        rep.edge_conn = edge_connectivity(g, 8);
        rep.vertex_conn = vertex_connectivity(g, 5);
    }
    bool four_ec = connected && rep.edge_conn.value >= 4;

    RankResult est = generic_rank(g, kDefaultGenericTrials, seed);
    if (p) rep.general_position_rank = rank_at(g, *p).rank;

    Rational b_t1 = Rational(8 * n, 5) - 1;
    Rational b_t3 = Rational(7 * n - 7, 4);
    Rational b_t4 = Rational(5 * n - 4, 3);

    // Escalate the generic estimate if it does not yet clear an applicable bound.
    auto needed = [&]() {
        if (applicable && Rational(est.rank) < b_t1) return true;
        if (four_ec && applicable && Rational(est.rank) < b_t3) return true;
        if (applicable && rep.vertex_conn.value >= 3 && Rational(est.rank) < b_t3) return true;
        return false;
    };
    if (applicable && needed()) {
        rep.escalated = true;
        est = generic_rank(g, 20, seed + 1);
        if (needed()) {
            int exact = rank_at(g, random_integer_configuration(n, seed + 2)).rank;
            est.rank = std::max(est.rank, exact);
            est.stress_count = g.edge_count() - est.rank;
        }
    }
    rep.generic_rank_estimate = est.rank;
    rep.generic_certified = est.certified;

    const int rg = est.rank;
    rep.bounds.push_back(detail::make_check("thm-generic", b_t1, applicable, rg));
    rep.bounds.push_back(detail::make_check("thm-general", b_t1, applicable && p.has_value(),
                                            rep.general_position_rank.value_or(0)));
    rep.bounds.push_back(detail::make_check("thm-4ec-generic", b_t3, applicable && four_ec, rg));
    rep.bounds.push_back(detail::make_check("thm-4ec-general", b_t4,
                                            applicable && four_ec && p.has_value(),
                                            rep.general_position_rank.value_or(0)));
    bool vc2 = applicable && rep.vertex_conn.value >= 2;
    bool vc3 = applicable && rep.vertex_conn.value >= 3;
    rep.bounds.push_back(detail::make_check("cor-2vc-generic", b_t1, vc2, rg));
    rep.bounds.push_back(detail::make_check("cor-2vc-general", b_t1, vc2 && p.has_value(),
                                            rep.general_position_rank.value_or(0)));
    rep.bounds.push_back(detail::make_check("cor-3vc-generic", b_t3, vc3, rg));
    rep.bounds.push_back(detail::make_check("cor-3vc-general", b_t4, vc3 && p.has_value(),
                                            rep.general_position_rank.value_or(0)));
    return rep;
}

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool all_pass() const {
        return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.pass; });
    }
};

namespace detail {

inline int best_modular_rank(const Graph& g, std::uint64_t seed, int trials,
                             const Graph* paired = nullptr, int* paired_rank = nullptr) {
    int best = 0, best2 = 0;
    for (int t = 0; t < trials; ++t) {
        auto rng = make_rng(seed, 0x6d72000 + static_cast<std::uint64_t>(t));
        u64 p = random_prime_62(rng);
        std::uniform_int_distribution<long long> coord(-kGenericCoordinateRange,
                                                       kGenericCoordinateRange);
        std::vector<std::pair<long long, long long>> pts(g.vertex_count());
        for (auto& pt : pts) pt = {coord(rng), coord(rng)};
        best = std::max(best, modular_rigidity_rank(g, pts, p));
        // Same configuration and prime for the paired graph.
        if (paired) best2 = std::max(best2, modular_rigidity_rank(*paired, pts, p));
    }
    if (paired_rank) *paired_rank = best2;
    return best;
}

}  // namespace detail

/// Stress-preservation suite for the deletion/disconnection reductions:
/// samples a general-position configuration and checks, for every applicable
/// reduction on g, that the stress count behaves as the corresponding lemma
/// states. Returns structured pass/fail items rather than throwing.
inline CheckReport check_stress_invariance(const Graph& g, std::uint64_t seed) {
    CheckReport rep;
    const int n = g.vertex_count();
    Configuration p = sample_general_position(n, seed);
    const int s_base = rank_at(g, p).stress_count;
    auto deg = g.degrees();

    for (int v = 0; v < n; ++v) {
        std::vector<int> map;
        Graph g2 = g.delete_vertex(v, &map);
        int s2 = rank_at(g2, restrict_configuration(p, map)).stress_count;
        int delta = s_base - s2;
        int limit = std::max(deg[v] - 2, 0);
        CheckItem item;
        item.name = "delete-vertex-" + std::to_string(v);
        item.pass = 0 <= delta && delta <= limit;
        item.detail = "degree " + std::to_string(deg[v]) + ", delta_s = " + std::to_string(delta) +
                      " (allowed 0.." + std::to_string(limit) + ")";
        rep.items.push_back(std::move(item));
    }

    for (const auto& e : g.edges()) {
        Graph g2 = g.delete_edges({e});
        if (g2.component_count() == g.component_count()) continue;
        int s2 = rank_at(g2, p).stress_count;
        CheckItem item;
        item.name = "bridge-" + std::to_string(e.first) + "-" + std::to_string(e.second);
        item.pass = s2 == s_base;
        item.detail = "s_p " + std::to_string(s_base) + " -> " + std::to_string(s2);
        rep.items.push_back(std::move(item));
    }

    if (auto cut = find_minimal_cut(g, 2); cut && cut->edges_removed.size() == 2) {
        int s2 = rank_at(g.delete_edges(cut->edges_removed), p).stress_count;
        CheckItem item;
        item.name = "two-cut";
        item.pass = s2 == s_base;
        item.detail = "s_p " + std::to_string(s_base) + " -> " + std::to_string(s2);
        rep.items.push_back(std::move(item));
    }

    if (classify(g).is_trimmed) {
        if (auto cut = find_minimal_cut(g, 3, /*require_no_common_vertex=*/true)) {
            Graph g2 = g.delete_edges(cut->edges_removed);
            int r2 = 0;
            int r1 = detail::best_modular_rank(g, seed + 7, 5, &g2, &r2);
            int s1 = g.edge_count() - r1;
            int s2 = g2.edge_count() - r2;
            CheckItem item;
            item.name = "spread-three-cut";
            item.pass = s1 == s2;
            item.detail = "generic s " + std::to_string(s1) + " vs " + std::to_string(s2);
            rep.items.push_back(std::move(item));
        }
    }
    return rep;
}

/// Checks the one-extension stress inequality s(G) <= s(G') both with
/// modular generic estimates and with exact ranks at a matched random
/// configuration. Preconditions of reverse_one_extension propagate.
inline CheckReport check_one_extension(const Graph& g, int t, std::uint64_t seed) {
    CheckReport rep;
    std::vector<int> map;
    Graph g2 = reverse_one_extension(g, t, &map);

    int r1 = generic_rank(g, kDefaultGenericTrials, seed).rank;
    int r2 = generic_rank(g2, kDefaultGenericTrials, seed + 1).rank;
    int s1 = g.edge_count() - r1;
    int s2 = g2.edge_count() - r2;
    CheckItem est;
    est.name = "generic-estimate";
    est.pass = s1 <= s2;
    est.detail = "s(G) = " + std::to_string(s1) + ", s(G') = " + std::to_string(s2);
    rep.items.push_back(std::move(est));

    Configuration p = random_integer_configuration(g.vertex_count(), seed + 2);
    int er1 = rank_at(g, p).rank;
    int er2 = rank_at(g2, restrict_configuration(p, map)).rank;
    CheckItem exact;
    exact.name = "exact-matched-configuration";
    exact.pass = (g.edge_count() - er1) <= (g2.edge_count() - er2);
    exact.detail = "r(G(p)) = " + std::to_string(er1) + ", r(G'(p')) = " + std::to_string(er2);
    rep.items.push_back(std::move(exact));
    return rep;
}

/// Stress bound for a type-A4 graph at a sampled general-position
/// configuration: s_p(G) <= n4/3 + c.
inline CheckItem check_a4_bound(const Graph& g, std::uint64_t seed) {
    auto flags = classify(g);
    CheckItem item;
    item.name = "a4-stress-bound";
    if (!flags.is_type_a4) throw std::invalid_argument("graph is not of type A4");
    Configuration p = sample_general_position(g.vertex_count(), seed);
    int s = rank_at(g, p).stress_count;
    Rational limit = Rational(flags.n4, 3) + g.component_count();
    item.pass = Rational(s) <= limit;
    item.detail = "s_p = " + std::to_string(s) + ", limit = " + format_rational(limit);
    return item;
}

/// Generic stress bound for a type-B4 graph: s(G) <= n4/4 + c, using the
/// modular estimate with escalation to an exact rank when inconclusive.
inline CheckItem check_b4_bound(const Graph& g, std::uint64_t seed) {
    auto flags = classify(g);
    CheckItem item;
    item.name = "b4-stress-bound";
    if (!flags.is_type_b4) throw std::invalid_argument("graph is not of type B4");
    Rational limit = Rational(flags.n4, 4) + g.component_count();
    int r = generic_rank(g, kDefaultGenericTrials, seed).rank;
    if (Rational(g.edge_count() - r) > limit) {
        r = std::max(r, generic_rank(g, 20, seed + 1).rank);
        if (Rational(g.edge_count() - r) > limit)
            r = std::max(r, rank_at(g, random_integer_configuration(g.vertex_count(), seed + 2)).rank);
    }
    int s = g.edge_count() - r;
    item.pass = Rational(s) <= limit;
    item.detail = "s = " + std::to_string(s) + ", limit = " + format_rational(limit);
    return item;
}

inline const char* kSurveyHeader =
    "n,m,edge_conn,vertex_conn,r_generic,r_at_p,bound_t1,bound_t3,bound_t4,slack_min,all_satisfied";

/// Streams one CSV row per instance; returns the number of bound violations.
/// Deterministic per seed; row order follows instance index.
inline int survey(const FamilySpec& spec, int count, std::uint64_t seed, std::ostream& os) {
    os << kSurveyHeader << "\n";
    if (count == 0) return 0;

    std::vector<Graph> graphs;
    if (spec.family == "random-regular") {
        int d = static_cast<int>(spec.get("d", 4));
        int n = static_cast<int>(spec.get("n", 20));
        for (int i = 0; i < count; ++i)
            graphs.push_back(random_regular(d, n, seed + i, /*require_connected=*/true));
    } else if (spec.family.empty()) {
        return 0;
    } else {
        for (const auto& inst : spec.instances()) graphs.push_back(inst.build());
    }

    int violations = 0;
    for (size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        Configuration p = sample_general_position(g.vertex_count(), mix_seed(seed, i + 1));
        BoundReport rep = check_bounds(g, p, mix_seed(seed, 0x1000 + i));
        auto fmt_conn = [](const ConnectivityValue& c) {
            return c.at_least_cap() ? ">=" + std::to_string(c.cap) : std::to_string(c.value);
        };
        Rational b_t1 = Rational(8 * rep.vertex_count, 5) - 1;
        Rational b_t3 = Rational(7 * rep.vertex_count - 7, 4);
        Rational b_t4 = Rational(5 * rep.vertex_count - 4, 3);
        os << rep.vertex_count << "," << rep.edge_count << "," << fmt_conn(rep.edge_conn) << ","
           << fmt_conn(rep.vertex_conn) << "," << rep.generic_rank_estimate << ","
           << (rep.general_position_rank ? std::to_string(*rep.general_position_rank) : "") << ","
           << format_rational(b_t1) << "," << format_rational(b_t3) << ","
           << format_rational(b_t4) << "," << format_rational(rep.min_slack()) << ","
           << (rep.all_satisfied() ? 1 : 0) << "\n";
        if (!rep.all_satisfied()) ++violations;
    }
    return violations;
}

}  // namespace rigidrank
