#include "doctest.h"
#include "gcore/closure.hpp"
#include "gcore/rng.hpp"
#include "test_util.hpp"

using namespace gcore;
using namespace gcore::testutil;

TEST_CASE("interval on a path covers the path") {
    Graph p = path_graph(3);
    CHECK(geodesic_interval(p, 0, 2) == VertexSet::full(3));
}

TEST_CASE("interval on C4 antipodal pair covers the cycle") {
    Graph c4 = cycle_graph(4);
    CHECK(geodesic_interval(c4, 0, 2) == VertexSet::full(4));
}

TEST_CASE("interval endpoints validated") {
    Graph p = path_graph(3);
    CHECK_THROWS_AS(geodesic_interval(p, 0, 9), ArgumentError);
}

TEST_CASE("interval matches path enumeration on random graphs") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = connected_erdos_renyi(6 + seed * 2, 0.25, seed * 31 + 1);
        Rng rng(seed);
        const auto n = static_cast<std::uint32_t>(g.vertex_count());
        for (int trial = 0; trial < 8; ++trial) {
            Vertex u = static_cast<Vertex>(rng.below(n));
            Vertex v = static_cast<Vertex>(rng.below(n));
            CHECK(geodesic_interval(g, u, v) == interval_by_enumeration(g, u, v));
        }
    }
}

TEST_CASE("closure of small sets") {
    Graph c6 = cycle_graph(6);
    CHECK(closure_exact(c6, VertexSet(6)).empty());
    CHECK(closure_exact(c6, VertexSet::of(6, {4})) == VertexSet::of(6, {4}));
    // antipodal pair: both length-3 arcs are shortest
    CHECK(closure_exact(c6, VertexSet::of(6, {0, 3})) == VertexSet::full(6));
}

TEST_CASE("closure matches pairwise-interval fixpoint oracle") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 8 + (seed % 4) * 5;
        Graph g = connected_erdos_renyi(n, 0.18, seed * 7 + 3);
        VertexSet x = random_subset(n, 2 + seed % 4, seed);
        CHECK(closure_exact(g, x) == closure_by_fixpoint(g, x));
    }
}

TEST_CASE("closure operator axioms") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const std::size_t n = 10 + (seed % 5) * 8;
        Graph g = connected_erdos_renyi(n, 0.12, seed * 13 + 5);
        VertexSet x = random_subset(n, 1 + seed % 5, seed + 100);
        VertexSet cx = closure_exact(g, x);

        CHECK(x.is_subset_of(cx));                    // extensive
        CHECK(closure_exact(g, cx) == cx);            // idempotent

        VertexSet y = cx;                             // x subset of y
        y.unite_with(random_subset(n, 3, seed + 200));
        VertexSet xy = x;
        xy.unite_with(random_subset(n, 3, seed + 200));
        CHECK(closure_exact(g, x).is_subset_of(closure_exact(g, xy))); // monotone

        // closed under intervals
        auto members = cx.to_vector();
        for (std::size_t i = 0; i < members.size(); i += 3)
            for (std::size_t j = i + 1; j < members.size(); j += 3)
                CHECK(geodesic_interval(g, members[i], members[j]).is_subset_of(cx));
    }
}
