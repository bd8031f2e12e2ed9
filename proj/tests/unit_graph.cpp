#include <sstream>

#include "doctest.h"
#include "gcore/graph.hpp"
#include "gcore/rng.hpp"
#include "test_util.hpp"

using namespace gcore;
using namespace gcore::testutil;

TEST_CASE("parse_edge_list basics") {
    std::istringstream in("# c\n0 1\n1 2");
    Graph g = parse_edge_list(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("parse_edge_list dedup and self-loop drop") {
    std::istringstream in("0 1\n1 0\n1 1");
    Graph g = parse_edge_list(in);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("parse_edge_list reports malformed lines") {
    std::istringstream in("0 1\n2 x\n");
    try {
        parse_edge_list(in);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    std::istringstream three("0 1 2\n");
    CHECK_THROWS_AS(parse_edge_list(three), ParseError);
}

TEST_CASE("parse keeps original labels") {
    std::istringstream in("100 7\n7 42\n");
    Graph g = parse_edge_list(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.label(0) == 100);
    CHECK(g.vertex_for_label(42).has_value());
    CHECK_FALSE(g.vertex_for_label(1).has_value());
}

TEST_CASE("adjacency is symmetric and sorted, m consistent") {
    Graph g = erdos_renyi(60, 0.1, 7);
    std::size_t degree_sum = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        auto nb = g.neighbors(u);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        degree_sum += nb.size();
        for (Vertex v : nb) CHECK(g.has_edge(v, u));
    }
    CHECK(degree_sum == 2 * g.edge_count());
}

TEST_CASE("serialize/parse round trip is idempotent") {
    Graph g0 = erdos_renyi(40, 0.12, 99);
    std::ostringstream s1;
    write_edge_list(g0, s1);
    std::istringstream in1(s1.str());
    Graph g1 = parse_edge_list(in1);

    std::ostringstream s2;
    write_edge_list(g1, s2);
    std::istringstream in2(s2.str());
    Graph g2 = parse_edge_list(in2);

    CHECK(s1.str() == s2.str());
    CHECK(g1.same_labeled_edges(g2));
    CHECK(g1.same_labeled_edges(g0));
}

TEST_CASE("largest_component keeps connected graphs intact") {
    Graph g = connected_erdos_renyi(30, 0.2, 3);
    Graph lc = largest_component(g);
    CHECK(lc.vertex_count() == g.vertex_count());
    CHECK(lc.edge_count() == g.edge_count());
}

TEST_CASE("largest_component picks the bigger piece") {
    // triangle 0-1-2 and a 5-path 3..7
    Graph g = make_graph(8, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
    Graph lc = largest_component(g);
    CHECK(lc.vertex_count() == 5);
    CHECK(lc.edge_count() == 4);
    CHECK(lc.label(0) == 3); // original labels preserved
}

TEST_CASE("largest_component of empty graph") {
    Graph g(0, {});
    CHECK(largest_component(g).vertex_count() == 0);
}

TEST_CASE("bfs_distances on path and cycle") {
    Graph p = path_graph(3);
    auto d = bfs_distances(p, 0);
    CHECK(d.hops == std::vector<std::uint32_t>{0, 1, 2});

    Graph c6 = cycle_graph(6);
    auto dc = bfs_distances(c6, 0);
    CHECK(dc.hops == std::vector<std::uint32_t>{0, 1, 2, 3, 2, 1});
}

TEST_CASE("bfs matches Floyd-Warshall on random graphs") {
    Graph g = erdos_renyi(50, 0.08, 123);
    auto fw = floyd_warshall(g);
    for (Vertex s = 0; s < g.vertex_count(); s += 7) {
        auto d = bfs_distances(g, s);
        CHECK(d.hops == fw[s]);
    }
}

TEST_CASE("degree_distribution on star and empty set") {
    Graph star = star_graph(3);
    auto all = VertexSet::full(4);
    auto hist = degree_distribution(star, all);
    CHECK(hist.size() == 2);
    CHECK(hist[1] == 3);
    CHECK(hist[3] == 1);

    auto none = degree_distribution(star, VertexSet(4));
    CHECK(none.empty());
}

TEST_CASE("degree_distribution counts sum to set size") {
    Graph g = erdos_renyi(80, 0.06, 5);
    VertexSet s = random_subset(80, 33, 17);
    auto hist = degree_distribution(g, s);
    std::size_t total = 0;
    for (auto [deg, cnt] : hist) total += cnt;
    CHECK(total == s.size());
}

TEST_CASE("VertexSet cardinality tracks bit operations") {
    VertexSet s(130);
    Rng rng(4);
    std::vector<bool> ref(130, false);
    for (int step = 0; step < 500; ++step) {
        Vertex v = static_cast<Vertex>(rng.below(130));
        if (rng.below(2)) {
            s.insert(v);
            ref[v] = true;
        } else {
            s.erase(v);
            ref[v] = false;
        }
    }
    std::size_t expected = 0;
    for (std::size_t v = 0; v < ref.size(); ++v) {
        if (ref[v]) ++expected;
        CHECK(s.contains(static_cast<Vertex>(v)) == ref[v]);
    }
    CHECK(s.size() == expected);
}
