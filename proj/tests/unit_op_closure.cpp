#include <algorithm>

#include "doctest.h"
#include "gcore/closure.hpp"
#include "gcore/op_closure.hpp"
#include "gcore/rng.hpp"
#include "gcore/sampler.hpp"
#include "test_util.hpp"

using namespace gcore;
using namespace gcore::testutil;

TEST_CASE("tree closure basics") {
    Graph p = path_graph(3);
    CHECK(tree_closure(p, VertexSet::of(3, {0, 2})) == VertexSet::full(3));
    CHECK(tree_closure(p, VertexSet(3)).empty());

    Graph star = star_graph(4);
    CHECK(tree_closure(star, VertexSet::of(5, {1, 3})) == VertexSet::of(5, {0, 1, 3}));
    CHECK(tree_closure(star, VertexSet::of(5, {2})) == VertexSet::of(5, {2}));

    CHECK_THROWS_AS(tree_closure(cycle_graph(4), VertexSet(4)), ArgumentError);
}

TEST_CASE("tree closure equals the exact closure on random trees") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n = 5 + seed % 26;
        Graph t = random_tree(n, seed * 3 + 7);
        VertexSet x = random_subset(n, 1 + seed % 5, seed);
        CHECK(tree_closure(t, x) == closure_exact(t, x));
    }
}

TEST_CASE("face closure on a hexagon") {
    BBTree t = build_bb_tree(cycle_graph(6));
    const Block& b = t.blocks[0];
    auto all = face_closure(b, 0, 0, 3); // antipodal
    CHECK(all.size() == 6);
    auto pair = face_closure(b, 0, 2, 3); // adjacent
    CHECK(pair == std::vector<Vertex>{2, 3});
    CHECK_THROWS_AS(face_closure(b, 0, 0, 99), ArgumentError);
}

TEST_CASE("face closure on an odd cycle always takes the shorter arc") {
    BBTree t = build_bb_tree(cycle_graph(5));
    const Block& b = t.blocks[0];
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex w = 0; w < 5; ++w) {
            if (u == w) continue;
            auto arc = face_closure(b, 0, u, w);
            CHECK(arc.size() < 5);
            CHECK(arc.size() >= 2);
        }
}

TEST_CASE("generator set: single member face") {
    BBTree t = build_bb_tree(cycle_graph(7));
    auto gens = generator_set(t.blocks[0], VertexSet::of(7, {4}));
    CHECK(gens == std::vector<Vertex>{4});
}

TEST_CASE("generator set spans the same closure, C8 spread") {
    Graph c8 = cycle_graph(8);
    BBTree t = build_bb_tree(c8);
    VertexSet x = VertexSet::of(8, {0, 3, 6});
    auto gens = generator_set(t.blocks[0], x);
    VertexSet gx(8);
    for (Vertex v : gens) gx.insert(v);
    CHECK(closure_exact(c8, gx) == closure_exact(c8, x));
}

TEST_CASE("generator set: oracle sweep over random blocks") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t len = 5 + seed % 14;
        Graph bg = random_outerplanar_block(len, seed % 10, seed * 13 + 1);
        BBTree t = build_bb_tree(bg);
        REQUIRE(t.blocks.size() == 1);
        const Block& block = t.blocks[0];

        VertexSet x = random_subset(len, 1 + seed % len, seed + 40);
        auto gens = generator_set(block, x);
        CHECK(gens.size() <= 3 * block.face_count());
        VertexSet gx(len);
        for (Vertex v : gens) {
            CHECK(x.contains(v)); // G_X subset of X
            gx.insert(v);
        }
        CHECK(closure_exact(bg, gx) == closure_exact(bg, x));
    }
}

TEST_CASE("block closure of two adjacent cycle vertices is the pair") {
    BBTree t = build_bb_tree(cycle_graph(6));
    VertexSet x = VertexSet::of(6, {2, 3});
    CHECK(block_closure(t.blocks[0], x) == x);
}

TEST_CASE("block closure equals exact closure on random blocks") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t len = 4 + seed % 37;
        Graph bg = random_outerplanar_block(len, seed % 12, seed * 5 + 3);
        BBTree t = build_bb_tree(bg);
        VertexSet x = random_subset(len, 2 + seed % 6, seed + 7);
        CHECK(block_closure(t.blocks[0], x) == closure_exact(bg, x));
    }
}

TEST_CASE("outerplanar closure trivial cases") {
    Graph g = random_outerplanar_block(9, 3, 2);
    CHECK(outerplanar_closure(g, VertexSet(9)).empty());
    CHECK(outerplanar_closure(g, VertexSet::of(9, {5})) == VertexSet::of(9, {5}));
    CHECK(outerplanar_closure(g, VertexSet::full(9)) == VertexSet::full(9));
}

TEST_CASE("fast, naive and exact closures coincide on sampled subgraphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 15 + (seed % 10) * 12;
        Graph g = connected_erdos_renyi(n, std::min(0.6, 5.0 / n), seed * 3 + 5);
        OuterplanarGraph h = sample_outerplanar(g, seed);
        BBTree t = build_bb_tree(h);

        VertexSet x = random_subset(n, 1 + seed % 7, seed + 1000);
        VertexSet fast = outerplanar_closure(h.graph, t, x);
        VertexSet naive = closure_naive_outerplanar(h.graph, x);
        VertexSet exact = closure_exact(h.graph, x);
        CHECK(fast == naive);
        CHECK(naive == exact);

        // one round of pairwise intervals is already closed on outerplanar inputs
        CHECK(closure_exact(h.graph, naive) == naive);
    }
}

TEST_CASE("closures coincide on block-and-bridge shaped graphs") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        // chain of blocks and bridges built by hand
        Rng rng(seed);
        std::vector<std::pair<Vertex, Vertex>> edges;
        Vertex next = 0;
        Vertex attach = 0;
        for (int part = 0; part < 4; ++part) {
            if (rng.below(2) == 0) { // bridge
                edges.emplace_back(attach, next + 1);
                attach = ++next;
            } else { // cycle block with optional chord
                const Vertex len = 3 + static_cast<Vertex>(rng.below(4));
                Vertex first = attach;
                Vertex prev = attach;
                for (Vertex i = 0; i + 1 < len; ++i) {
                    edges.emplace_back(prev, next + 1);
                    prev = ++next;
                }
                edges.emplace_back(prev, first);
                if (len >= 5) edges.emplace_back(first, prev - 1);
                attach = prev;
            }
        }
        Graph g(next + 1, std::move(edges));
        REQUIRE(is_connected(g));

        for (int trial = 0; trial < 4; ++trial) {
            VertexSet x = random_subset(g.vertex_count(), 1 + trial,
                                        seed * 10 + static_cast<std::uint64_t>(trial));
            VertexSet fast = outerplanar_closure(g, x);
            CHECK(fast == closure_exact(g, x));
            CHECK(fast == closure_naive_outerplanar(g, x));
        }
    }
}
