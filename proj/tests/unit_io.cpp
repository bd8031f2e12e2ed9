#include <sstream>

#include "doctest.h"
#include "gcore/io.hpp"
#include "gcore/sampler.hpp"
#include "test_util.hpp"

using namespace gcore;
using namespace gcore::testutil;

TEST_CASE("vertex label file round trip, sorted ascending") {
    std::istringstream in("42\n7\n# comment\n\n13\n");
    auto labels = read_vertex_labels(in);
    CHECK(labels == std::vector<std::int64_t>{42, 7, 13});

    std::istringstream bad("12\nxyz\n");
    CHECK_THROWS_AS(read_vertex_labels(bad), ParseError);

    Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    std::ostringstream out;
    write_vertex_set(out, g, VertexSet::of(4, {2, 0}));
    CHECK(out.str() == "0\n2\n");
}

TEST_CASE("labels_to_set names unknown labels") {
    std::istringstream in("5 6\n6 7\n");
    Graph g = parse_edge_list(in);
    CHECK(labels_to_set(g, {5, 7}).size() == 2);
    try {
        labels_to_set(g, {5, 99});
        FAIL("expected ArgumentError");
    } catch (const ArgumentError& e) {
        CHECK(std::string(e.what()).find("99") != std::string::npos);
    }
}

TEST_CASE("histogram csv format") {
    std::map<std::size_t, std::size_t> hist{{1, 3}, {4, 2}};
    std::ostringstream out;
    write_histogram_csv(out, hist);
    CHECK(out.str() == "degree,count\n1,3\n4,2\n");
}

TEST_CASE("tagged edge list reloads the embedding structure exactly") {
    Graph g = connected_erdos_renyi(50, 0.15, 33);
    OuterplanarGraph h = sample_outerplanar(g, 4);

    std::ostringstream out;
    write_tagged_edge_list(out, h);
    std::istringstream in(out.str());
    OuterplanarGraph back = parse_tagged_edge_list(in);

    CHECK(back.graph.same_labeled_edges(h.graph));
    auto as_labels = [](const Graph& gr, const std::vector<std::pair<Vertex, Vertex>>& edges) {
        std::vector<std::pair<std::int64_t, std::int64_t>> out_list;
        for (auto [a, b] : edges) out_list.emplace_back(gr.label(a), gr.label(b));
        std::sort(out_list.begin(), out_list.end());
        return out_list;
    };
    CHECK(as_labels(back.graph, back.tree_edges) == as_labels(h.graph, h.tree_edges));
    CHECK(as_labels(back.graph, back.left_edges) == as_labels(h.graph, h.left_edges));
    CHECK(as_labels(back.graph, back.right_edges) == as_labels(h.graph, h.right_edges));
}

TEST_CASE("tagged edge list rejects malformed lines") {
    std::istringstream bad_tag("0 1 X\n");
    CHECK_THROWS_AS(parse_tagged_edge_list(bad_tag), ParseError);
    std::istringstream missing("0 1\n");
    CHECK_THROWS_AS(parse_tagged_edge_list(missing), ParseError);
    std::istringstream trailing("0 1 T extra\n");
    CHECK_THROWS_AS(parse_tagged_edge_list(trailing), ParseError);
}

TEST_CASE("stats writer emits ordered key=value lines") {
    StatsWriter stats;
    stats.add("alpha", 1);
    stats.add("beta", std::string("two"));
    stats.add("gamma", 2.5);
    std::ostringstream out;
    stats.write(out);
    CHECK(out.str() == "alpha=1\nbeta=two\ngamma=2.5\n");
}
