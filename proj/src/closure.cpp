#include "gcore/closure.hpp"

#include <deque>

#include "gcore/detail/sweep.hpp"

namespace gcore {

VertexSet geodesic_interval(const Graph& g, Vertex u, Vertex v) {
    const std::size_t n = g.vertex_count();
    if (u >= n || v >= n) throw ArgumentError("interval endpoint out of range");

    VertexSet result(n);
    result.insert(u);
    result.insert(v);
    if (u == v) return result;

    DistanceField from_u = bfs_distances(g, u);
    if (from_u.hops[v] == kUnreachable) return result;

    std::vector<std::uint8_t> marks(n, 0);
    marks[v] = 1;
    std::vector<Vertex> order;
    detail::sweep_shortest_path_union(
        n, [&](Vertex x) { return g.neighbors(x); }, from_u.hops, marks, order);
    for (std::size_t x = 0; x < n; ++x)
        if (marks[x]) result.insert(static_cast<Vertex>(x));
    return result;
}

VertexSet closure_exact(const Graph& g, const VertexSet& x) {
    const std::size_t n = g.vertex_count();
    if (x.universe_size() != n) throw ArgumentError("vertex set universe does not match graph");

    VertexSet result = x;
    if (x.size() <= 1) return result;

    std::deque<Vertex> worklist;
    x.for_each([&](Vertex v) { worklist.push_back(v); });

    std::vector<std::uint8_t> marks(n, 0);
    std::vector<Vertex> order;
    while (!worklist.empty()) {
        const Vertex u = worklist.front();
        worklist.pop_front();

        DistanceField dist = bfs_distances(g, u);
        std::fill(marks.begin(), marks.end(), 0);
        result.for_each([&](Vertex v) {
            if (dist.hops[v] != kUnreachable) marks[v] = 1;
        });
        detail::sweep_shortest_path_union(
            n, [&](Vertex y) { return g.neighbors(y); }, dist.hops, marks, order);

        for (std::size_t v = 0; v < n; ++v) {
            if (marks[v] && !result.contains(static_cast<Vertex>(v))) {
                result.insert(static_cast<Vertex>(v));
                worklist.push_back(static_cast<Vertex>(v));
            }
        }
    }
    return result;
}

} // namespace gcore
