#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gcore/graph.hpp"

namespace gcore::detail {

/// Marks every vertex lying on a shortest path from the BFS source of `dist`
/// to any marked seed. Seeds must already be set in `marks` (restricted to
/// finite-distance vertices). One backward sweep over decreasing BFS levels:
/// x is on such a path iff it is a seed or has a marked neighbor one level
/// further out.
///
/// `NeighborFn(v)` returns an iterable of neighbors; `order` is scratch.
template <typename NeighborFn>
void sweep_shortest_path_union(std::size_t n, NeighborFn&& neighbors,
                               std::span<const std::uint32_t> dist,
                               std::vector<std::uint8_t>& marks,
                               std::vector<Vertex>& order) {
    // counting sort vertices by finite distance
    std::uint32_t max_d = 0;
    std::size_t finite = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (dist[v] == kUnreachable) continue;
        ++finite;
        if (dist[v] > max_d) max_d = dist[v];
    }
    std::vector<std::size_t> bucket_start(max_d + 2, 0);
    for (std::size_t v = 0; v < n; ++v)
        if (dist[v] != kUnreachable) ++bucket_start[dist[v] + 1];
    for (std::uint32_t d = 0; d <= max_d; ++d) bucket_start[d + 1] += bucket_start[d];
    order.resize(finite);
    {
        std::vector<std::size_t> cursor(bucket_start.begin(), bucket_start.end() - 1);
        for (std::size_t v = 0; v < n; ++v)
            if (dist[v] != kUnreachable) order[cursor[dist[v]]++] = static_cast<Vertex>(v);
    }

    for (std::size_t idx = order.size(); idx-- > 0;) {
        const Vertex x = order[idx];
        if (marks[x]) continue;
        const std::uint32_t next_level = dist[x] + 1;
        for (Vertex y : neighbors(x)) {
            if (dist[y] == next_level && marks[y]) {
                marks[x] = 1;
                break;
            }
        }
    }
    // vertices at infinite distance never get marked
    for (std::size_t v = 0; v < n; ++v)
        if (dist[v] == kUnreachable) marks[v] = 0;
}

} // namespace gcore::detail
