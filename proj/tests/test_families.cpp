#include "rigidrank/connectivity.hpp"
#include "rigidrank/families.hpp"
#include "rigidrank/modular.hpp"
#include "rigidrank/rigidity.hpp"

#include "oracle.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace rigidrank;

TEST_CASE("complete graphs and cycles") {
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(complete_graph(1).vertex_count() == 1);
    CHECK(complete_graph(1).edge_count() == 0);
    Graph c6 = cycle(6);
    CHECK(c6.edge_count() == 6);
    for (int v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);
}

TEST_CASE("chained K5-minus-edge family") {
    for (int k = 2; k <= 5; ++k) {
        Graph g = chained_k5_minus_edge(k);
        CHECK(g.vertex_count() == 5 * k);
        CHECK(g.edge_count() == 10 * k);
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 4);
        CHECK(g.is_connected());
        CHECK(generic_rank(g, 5, 17).rank == 8 * k);
    }
    CHECK_THROWS_AS(chained_k5_minus_edge(1), std::invalid_argument);
    // rank at sampled general position matches the generic value
    for (int k : {2, 3}) {
        Graph g = chained_k5_minus_edge(k);
        CHECK(rank_at(g, sample_general_position(5 * k, 5 + k)).rank == 8 * k);
    }
}

TEST_CASE("chained K4 family") {
    CHECK(generic_rank(chained_k4(2), 5, 17).rank == 13);
    for (int k = 3; k <= 5; ++k) {
        Graph g = chained_k4(k);
        CHECK(g.vertex_count() == 4 * k);
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 4);
        CHECK(edge_connectivity(g, 5).value == 4);
        CHECK(generic_rank(g, 5, 17).rank == 7 * k);
    }
    CHECK_THROWS_AS(chained_k4(1), std::invalid_argument);
    // k = 2 wiring is the K4 x K2 product (up to relabeling)
    Graph k42 = chained_k4(2);
    CHECK(k42.edge_count() == 16);
    for (int v = 0; v < 8; ++v) CHECK(k42.degree(v) == 4);
    CHECK(edge_connectivity(k42, 5).value == 4);
}

TEST_CASE("K3 prism family") {
    Graph g = k3_prism(6);
    CHECK(g.vertex_count() == 18);
    CHECK(g.edge_count() == 36);
    CHECK(edge_connectivity(g, 5).value == 4);
    Graph g3 = k3_prism(3);
    CHECK(g3.vertex_count() == 9);
    for (int v = 0; v < 9; ++v) CHECK(g3.degree(v) == 4);
    CHECK_THROWS_AS(k3_prism(2), std::invalid_argument);
}

TEST_CASE("random regular graphs") {
    Graph g = random_regular(4, 10, 3);
    for (int v = 0; v < 10; ++v) CHECK(g.degree(v) == 4);
    CHECK_THROWS_AS(random_regular(3, 5, 1), std::invalid_argument);  // odd sum
    CHECK_THROWS_AS(random_regular(5, 5, 1), std::invalid_argument);  // d >= n
    Graph h = random_regular(4, 12, 5, true, 4);
    CHECK(edge_connectivity(h, 5).value == 4);
    // deterministic per seed
    CHECK(random_regular(4, 12, 9) == random_regular(4, 12, 9));
}

TEST_CASE("product configurations obey the product rank formula") {
    auto pk2 = sample_general_position(2, 1);
    Graph k2 = complete_graph(2);
    auto pc = product_configuration(k2, pk2, k2, sample_general_position(2, 2), 3);
    Graph c4 = cartesian_product(k2, k2);
    CHECK(rank_at(c4, pc).rank == 4);  // 1 + 1 + 2*1*1

    Graph k3 = complete_graph(3);
    Graph p6 = cycle(6);
    auto p1 = sample_general_position(3, 4);
    auto p2 = sample_general_position(6, 5);
    auto pp = product_configuration(k3, p1, p6, p2, 6);
    CHECK(is_general_position(pp));
    CHECK(rank_at(cartesian_product(k3, p6), pp).rank == 29);

    CHECK_THROWS_AS(product_configuration(Graph(2, {}), pk2, k2, pk2, 1), std::invalid_argument);
}

TEST_CASE("product rank formula on random factor pairs") {
    std::mt19937_64 rng(51);
    int done = 0;
    while (done < 8) {
        Graph g1 = done % 2 ? oracle::random_tree(2 + done % 4, rng) : complete_graph(2 + done % 3);
        Graph g2 = done % 3 ? cycle(3 + done % 3) : oracle::random_tree(3, rng);
        auto p1 = sample_general_position(g1.vertex_count(), 60 + done);
        auto p2 = sample_general_position(g2.vertex_count(), 80 + done);
        auto pp = product_configuration(g1, p1, g2, p2, 90 + done);
        int lhs = rank_at(cartesian_product(g1, g2), pp).rank;
        int rhs = rank_at(g1, p1).rank + rank_at(g2, p2).rank +
                  2 * (g1.vertex_count() - 1) * (g2.vertex_count() - 1);
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("family spec parsing") {
    auto spec = FamilySpec::parse("random-regular:d=4,n=20,seed=7");
    CHECK(spec.family == "random-regular");
    CHECK(spec.get("d") == 4);
    CHECK(spec.get("seed") == 7);

    CHECK(FamilySpec::parse("chained-k5me:k=3").build() == chained_k5_minus_edge(3));
    CHECK(FamilySpec::parse("k3-prism:n=6").build() == k3_prism(6));
    CHECK(FamilySpec::parse("cartesian-product:l=3,n=6").build() == k3_prism(6));

    auto range = FamilySpec::parse("chained-k5me:k=2..4").instances();
    REQUIRE(range.size() == 3);
    CHECK(range[1].build() == chained_k5_minus_edge(3));

    CHECK_THROWS_AS(FamilySpec::parse("nope:k=1").build(), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("cycle:n"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("cycle:n=x"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("cycle").build(), std::invalid_argument);
}
