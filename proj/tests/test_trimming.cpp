#include "rigidrank/families.hpp"
#include "rigidrank/modular.hpp"
#include "rigidrank/rigidity.hpp"
#include "rigidrank/trimming.hpp"

#include "oracle.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace rigidrank;

namespace {

Graph triangle_with_pendant() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

Graph two_k4_matched() {
    std::vector<Edge> edges;
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) edges.push_back({4 * c + i, 4 * c + j});
    edges.push_back({0, 4});
    edges.push_back({1, 5});
    edges.push_back({2, 6});
    return Graph(8, edges);
}

Graph wheel5() {
    // hub 0, rim 1..4
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 4}});
}

}  // namespace

TEST_CASE("classification of small graphs") {
    auto k4 = classify(complete_graph(4));
    CHECK(k4.is_trimmed);
    CHECK(k4.is_generically_trimmed);
    CHECK(k4.is_type_a4);
    CHECK(k4.is_type_b4);
    CHECK(k4.n4 == 0);
    CHECK(k4.degree3_count_per_component == std::vector<int>{4});

    auto k5 = classify(complete_graph(5));
    CHECK(!k5.is_type_a4);  // no degree-3 vertex
    CHECK(!k5.is_type_b4);
    CHECK(k5.n4 == 5);
    CHECK(k5.is_trimmed);

    auto empty = classify(Graph());
    CHECK(empty.is_trimmed);
    CHECK(empty.is_generically_trimmed);
    CHECK(empty.is_type_a4);
    CHECK(empty.is_type_b4);
    CHECK(empty.n4 == 0);

    // flag implications
    CHECK((!k4.is_type_b4 || k4.is_generically_trimmed));
    CHECK((!k4.is_type_a4 || k4.is_trimmed));
}

TEST_CASE("trim leaves trimmed graphs alone") {
    auto t = trim(complete_graph(4));
    CHECK(t.steps.empty());
    CHECK(t.final_graph == complete_graph(4));
    CHECK(t.label_map == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("trim removes pendants by rule 1") {
    // everything is eventually removed: the triangle vertices have degree 2
    auto t = trim(triangle_with_pendant());
    REQUIRE(t.steps.size() == 4);
    CHECK(t.steps[0].kind == TrimStepKind::DeleteLowDegreeVertex);
    CHECK(t.steps[0].removed_vertices == std::vector<int>{0});
    CHECK(t.steps[0].degree_at_removal == 2);
    CHECK(t.final_graph.vertex_count() == 0);
    CHECK(replay_matches(t));
}

TEST_CASE("trim splits the chained K5-e loop into its copies") {
    auto t = trim(chained_k5_minus_edge(3));
    CHECK(t.final_graph.vertex_count() == 15);
    CHECK(t.final_graph.edge_count() == 27);  // 3 connector edges removed
    CHECK(t.final_graph.component_count() == 3);
    for (const auto& step : t.steps) CHECK(step.kind == TrimStepKind::RemoveSmallCut);
    CHECK(classify(t.final_graph).is_trimmed);
    CHECK(replay_matches(t));
    // each component is K5 minus one edge: 4-regular except two degree-3 vertices
    auto deg = t.final_graph.degrees();
    CHECK(std::count(deg.begin(), deg.end(), 3) == 6);
    CHECK(std::count(deg.begin(), deg.end(), 4) == 9);
}

TEST_CASE("generic trim") {
    CHECK(generic_trim(chained_k4(4)).steps.empty());
    CHECK(generic_trim(complete_graph(4)).steps.empty());

    auto t = generic_trim(two_k4_matched());
    REQUIRE(t.steps.size() == 1);
    CHECK(t.steps[0].kind == TrimStepKind::RemoveSpreadThreeCut);
    CHECK(t.steps[0].removed_edges == std::vector<Edge>{{0, 4}, {1, 5}, {2, 6}});
    CHECK(t.final_graph.component_count() == 2);
    CHECK(t.final_graph.edge_count() == 12);
    CHECK(classify(t.final_graph).is_generically_trimmed);
    CHECK(replay_matches(t));
}

TEST_CASE("trim soundness on random graphs") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = oracle::random_graph(3 + trial % 8, 0.45, rng);
        auto t = trim(g);
        CHECK(replay_matches(t));
        CHECK(classify(t.final_graph).is_trimmed);
        auto tg = generic_trim(g);
        CHECK(replay_matches(tg));
        CHECK(classify(tg.final_graph).is_generically_trimmed);
    }
}

TEST_CASE("trimming preserves the exact stress count at general position") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = trial == 0 ? chained_k5_minus_edge(2) : oracle::random_graph(5 + trial % 5, 0.45, rng);
        Configuration p = sample_general_position(g.vertex_count(), 100 + trial);
        auto t = trim(g);
        int before = rank_at(g, p).stress_count;
        int after = rank_at(t.final_graph, restrict_configuration(p, t.label_map)).stress_count;
        CHECK(before == after);
    }
}

TEST_CASE("generic trimming preserves the modular stress estimate") {
    for (int k : {2, 3}) {
        Graph g = chained_k5_minus_edge(k);
        auto t = generic_trim(g);
        auto est = [&](const Graph& h, std::uint64_t seed) {
            return h.edge_count() - generic_rank(h, 5, seed).rank;
        };
        CHECK(est(g, 9) == est(t.final_graph, 9));
    }
    Graph g = two_k4_matched();
    auto t = generic_trim(g);
    CHECK(g.edge_count() - generic_rank(g, 5, 9).rank ==
          t.final_graph.edge_count() - generic_rank(t.final_graph, 5, 9).rank);
}

TEST_CASE("reverse one-extension") {
    // K4 minus edge (2,3): vertex 0 has degree 3 and a non-adjacent neighbor pair
    Graph k4me(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    Graph g = reverse_one_extension(k4me, 0);
    CHECK(g == complete_graph(3));

    CHECK_THROWS_AS(reverse_one_extension(complete_graph(4), 0), no_missing_pair_error);
    CHECK_THROWS_AS(reverse_one_extension(complete_graph(5), 0), std::invalid_argument);

    // wheel rim vertex: neighbors {0, 2, 4}, chord (2,4) gets added
    std::vector<int> map;
    Graph w = reverse_one_extension(wheel5(), 1, &map);
    CHECK(w.vertex_count() == 4);
    CHECK(map == std::vector<int>{0, 2, 3, 4});
    CHECK(w.has_edge(1, 3));  // old (2,4)
    CHECK(w.edge_count() == 6);
}
