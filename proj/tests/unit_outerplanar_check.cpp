#include "doctest.h"
#include "gcore/outerplanar_check.hpp"
#include "gcore/rng.hpp"
#include "gcore/sampler.hpp"
#include "test_util.hpp"

using namespace gcore;
using namespace gcore::testutil;

TEST_CASE("oracle on known families") {
    CHECK(is_outerplanar_oracle(cycle_graph(5)));
    CHECK(is_outerplanar_oracle(path_graph(7)));
    CHECK(is_outerplanar_oracle(random_tree(20, 3)));
    CHECK(is_outerplanar_oracle(random_outerplanar_block(12, 6, 4)));
    CHECK_FALSE(is_outerplanar_oracle(complete_graph(4)));
    CHECK_FALSE(is_outerplanar_oracle(complete_bipartite(2, 3)));
    CHECK_FALSE(is_outerplanar_oracle(complete_graph(5)));

    // Petersen graph: K5 minor
    Graph petersen = make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                     {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                     {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    CHECK_FALSE(is_outerplanar_oracle(petersen));
}

TEST_CASE("oracle size limit") {
    CHECK_THROWS_AS(is_outerplanar_oracle(path_graph(65)), ArgumentError);
}

TEST_CASE("linear test agrees with the oracle on small random graphs") {
    int positives = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 4 + seed % 9;
        const double p = 0.15 + 0.5 * static_cast<double>(seed % 7) / 6.0;
        Graph g = erdos_renyi(n, p, seed * 17 + 1);
        const bool oracle = is_outerplanar_oracle(g);
        CHECK(is_outerplanar(g) == oracle);
        positives += oracle;
    }
    CHECK(positives > 30); // both outcomes exercised
    CHECK(positives < 270);
}

TEST_CASE("linear test agrees with the oracle on near-outerplanar graphs") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        // outerplanar block plus a few random extra edges
        Graph base = random_outerplanar_block(8 + seed % 10, seed % 5, seed);
        auto edges = base.edges();
        Rng rng(seed + 900);
        const auto n = static_cast<std::uint32_t>(base.vertex_count());
        for (int extra = 0; extra < static_cast<int>(seed % 3); ++extra)
            edges.emplace_back(static_cast<Vertex>(rng.below(n)),
                               static_cast<Vertex>(rng.below(n)));
        Graph g(n, std::move(edges));
        CHECK(is_outerplanar(g) == is_outerplanar_oracle(g));
    }
}

TEST_CASE("maximality of an already-maximal subgraph") {
    // maximal outerplanar graph: fan triangulation
    Graph fan = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                               {0, 2}, {0, 3}, {0, 4}});
    SampleTrace trace;
    OuterplanarGraph h = sample_outerplanar(fan, 5, &trace);
    if (h.graph.edge_count() == fan.edge_count()) {
        auto report = maximality_deficit(fan, h);
        CHECK(report.addable_edges == 0);
        CHECK(report.relative_maximality == doctest::Approx(100.0));
    }
}

TEST_CASE("maximality of a C4 spanning tree") {
    Graph c4 = cycle_graph(4);
    OuterplanarGraph h;
    h.tree_edges = {{1, 0}, {2, 1}, {3, 2}};
    h.graph = Graph(4, {{0, 1}, {1, 2}, {2, 3}});
    auto report = maximality_deficit(c4, h);
    CHECK(report.addable_edges == 1);
    CHECK(report.relative_maximality == doctest::Approx(75.0));
}

TEST_CASE("maximality rejects non-subgraphs") {
    Graph c4 = cycle_graph(4);
    OuterplanarGraph h;
    h.graph = Graph(4, {{0, 2}});
    CHECK_THROWS_AS(maximality_deficit(c4, h), ArgumentError);
}

TEST_CASE("sampled subgraphs are close to maximal on small dense inputs") {
    double total = 0;
    int runs = 0;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = connected_erdos_renyi(60, 0.25, seed + 50);
        OuterplanarGraph h = sample_outerplanar(g, seed);
        auto report = maximality_deficit(g, h);
        // greedily completed graph stays outerplanar and is a supergraph
        total += report.relative_maximality;
        ++runs;
    }
    CHECK(total / runs > 90.0);
}
