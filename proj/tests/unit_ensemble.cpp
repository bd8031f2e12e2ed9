#include "doctest.h"
#include "gcore/closure.hpp"
#include "gcore/ensemble.hpp"
#include "gcore/op_closure.hpp"
#include "gcore/rng.hpp"
#include "test_util.hpp"

using namespace gcore;
using namespace gcore::testutil;

namespace {

EnsembleConfig config_of(std::size_t n, double t, std::uint64_t seed, unsigned jobs = 1) {
    EnsembleConfig c;
    c.num_subgraphs = n;
    c.threshold_percent = t;
    c.master_seed = seed;
    c.jobs = jobs;
    return c;
}

} // namespace

TEST_CASE("vote threshold rounds up and never drops to zero") {
    Graph g = cycle_graph(5);
    CHECK(Ensemble(g, config_of(100, 1.0, 1)).votes_required() == 1);
    CHECK(Ensemble(g, config_of(100, 10.0, 1)).votes_required() == 10);
    CHECK(Ensemble(g, config_of(100, 10.5, 1)).votes_required() == 11);
    CHECK(Ensemble(g, config_of(3, 100.0, 1)).votes_required() == 3);
    CHECK(Ensemble(g, config_of(100, 0.1, 1)).votes_required() == 1);
    CHECK(Ensemble(g, config_of(1000, 0.1, 1)).votes_required() == 1);
}

TEST_CASE("invalid configs rejected") {
    Graph g = cycle_graph(5);
    CHECK_THROWS_AS(Ensemble(g, config_of(0, 1.0, 1)), ArgumentError);
    CHECK_THROWS_AS(Ensemble(g, config_of(10, 0.0, 1)), ArgumentError);
    CHECK_THROWS_AS(Ensemble(g, config_of(10, 101.0, 1)), ArgumentError);
}

TEST_CASE("single-subgraph ensemble equals that subgraph's closure") {
    Graph g = connected_erdos_renyi(40, 0.15, 21);
    EnsembleConfig cfg = config_of(1, 50.0, 77);
    Ensemble ensemble(g, cfg);
    VertexSet x = random_subset(40, 4, 5);

    OuterplanarGraph h = sample_outerplanar(g, derive_seed(77, 0));
    CHECK(ensemble.closure(x) == outerplanar_closure(h.graph, x));
}

TEST_CASE("tree input reproduces the exact closure for any config") {
    Graph t = random_tree(35, 3);
    VertexSet x = random_subset(35, 5, 9);
    VertexSet exact = closure_exact(t, x);
    for (auto [count, threshold] : std::vector<std::pair<std::size_t, double>>{
             {1, 100.0}, {8, 1.0}, {20, 50.0}})
        CHECK(approximate_closure(t, x, config_of(count, threshold, 4)) == exact);
}

TEST_CASE("edge-preserving samples of outerplanar inputs reproduce the exact closure") {
    // The sampler is greedy, not maximal: even on an outerplanar input a few
    // back edges may be dropped. Whenever a draw keeps all edges, the ensemble
    // closure must be exact.
    Graph g = random_outerplanar_block(20, 6, 8);
    VertexSet x = random_subset(20, 4, 2);
    VertexSet exact = closure_exact(g, x);
    int preserved = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        EnsembleConfig cfg = config_of(1, 100.0, seed);
        Ensemble ensemble(g, cfg);
        if (ensemble.subgraph(0).graph.edge_count() == g.edge_count()) {
            ++preserved;
            CHECK(ensemble.closure(x) == exact);
        }
    }
    CHECK(preserved > 0);
}

TEST_CASE("approximate closure contains the seed set") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = connected_erdos_renyi(50, 0.1, seed + 30);
        VertexSet x = random_subset(50, 6, seed);
        VertexSet approx = approximate_closure(g, x, config_of(10, 40.0, seed));
        CHECK(x.is_subset_of(approx));
    }
}

TEST_CASE("tightening the threshold shrinks the result") {
    Graph g = connected_erdos_renyi(60, 0.12, 4);
    VertexSet x = random_subset(60, 6, 1);
    Ensemble ensemble(g, config_of(30, 1.0, 12));
    auto votes = ensemble.vote_counts(x);

    VertexSet loose(60), tight(60);
    for (std::size_t v = 0; v < votes.size(); ++v) {
        if (votes[v] >= 1) loose.insert(static_cast<Vertex>(v));
        if (votes[v] >= 15) tight.insert(static_cast<Vertex>(v));
    }
    CHECK(tight.is_subset_of(loose));

    CHECK(approximate_closure(g, x, config_of(30, 50.0, 12))
              .is_subset_of(approximate_closure(g, x, config_of(30, 1.0, 12))));
}

TEST_CASE("deterministic given the master seed, independent of job count") {
    Graph g = connected_erdos_renyi(70, 0.1, 15);
    VertexSet x = random_subset(70, 5, 3);
    VertexSet a = approximate_closure(g, x, config_of(16, 5.0, 99, 1));
    VertexSet b = approximate_closure(g, x, config_of(16, 5.0, 99, 4));
    VertexSet c = approximate_closure(g, x, config_of(16, 5.0, 99, 3));
    CHECK(a == b);
    CHECK(a == c);

    VertexSet other = approximate_closure(g, x, config_of(16, 5.0, 100, 1));
    // different master seed samples different subgraphs (results may still
    // coincide; vote counts almost surely differ)
    Ensemble e1(g, config_of(16, 5.0, 99));
    Ensemble e2(g, config_of(16, 5.0, 100));
    CHECK(e1.subgraph(0).graph.edges() != e2.subgraph(0).graph.edges());
}
