#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gcore/vertex_set.hpp"

namespace gcore::detail {

/// Iterative lowpoint DFS. Returns the biconnected components as edge lists;
/// a one-edge component is a bridge. Works on any (possibly disconnected)
/// adjacency accessor: NeighborsFn(v) yields an iterable of neighbors.
template <typename NeighborsFn>
std::vector<std::vector<std::pair<Vertex, Vertex>>> biconnected_components(std::size_t n,
                                                                           NeighborsFn&& nbrs) {
    constexpr std::uint32_t kUnset = 0xffffffffu;
    std::vector<std::uint32_t> disc(n, kUnset), low(n, kUnset);
    std::vector<Vertex> parent(n, static_cast<Vertex>(kUnset));
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    std::vector<std::vector<std::pair<Vertex, Vertex>>> components;

    struct Frame {
        Vertex v;
        std::size_t next_index;
    };
    std::vector<Frame> frames;
    std::uint32_t clock = 0;

    for (Vertex start = 0; start < n; ++start) {
        if (disc[start] != kUnset) continue;
        frames.push_back({start, 0});
        disc[start] = low[start] = clock++;
        while (!frames.empty()) {
            auto& frame = frames.back();
            const Vertex v = frame.v;
            bool descended = false;
            auto neighbors = nbrs(v);
            while (frame.next_index < neighbors.size()) {
                const Vertex w = neighbors[frame.next_index++];
                if (disc[w] == kUnset) {
                    parent[w] = v;
                    disc[w] = low[w] = clock++;
                    edge_stack.emplace_back(v, w);
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (w != parent[v] && disc[w] < disc[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
            }
            if (descended) continue;
            frames.pop_back();
            if (frames.empty()) break;
            const Vertex u = frames.back().v;
            low[u] = std::min(low[u], low[v]);
            if (low[v] >= disc[u]) {
                std::vector<std::pair<Vertex, Vertex>> comp;
                while (!edge_stack.empty()) {
                    auto e = edge_stack.back();
                    edge_stack.pop_back();
                    comp.push_back(e);
                    if (e.first == u && e.second == v) break;
                }
                components.push_back(std::move(comp));
            }
        }
    }
    return components;
}

} // namespace gcore::detail
