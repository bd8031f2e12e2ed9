#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gcore/graph.hpp"

namespace gcore {

/// Rooted ordered DFS tree with its path decomposition.
///
/// The traversal splits into maximal descent runs ("DFS paths"): path 1 starts
/// at the root and ends at the first leaf reached; each later path starts at
/// the deepest already-visited vertex that still had an unvisited child and
/// runs down to the next leaf. Every vertex appears as a non-initial vertex of
/// exactly one path.
struct DfsState {
    Vertex root = kNoVertex;
    std::vector<Vertex> parent;         // kNoVertex at the root
    std::vector<std::uint32_t> depth;
    std::vector<std::uint32_t> pre_in;  // preorder entry rank
    std::vector<std::uint32_t> pre_out; // preorder exit rank
    std::vector<std::uint32_t> path_offsets;
    std::vector<Vertex> path_vertices;  // concatenated [r_i .. l_i] sequences

    std::size_t path_count() const { return path_offsets.size() - 1; }

    std::span<const Vertex> path(std::size_t i) const {
        return {path_vertices.data() + path_offsets[i],
                path_vertices.data() + path_offsets[i + 1]};
    }

    /// ancestor-or-self order: x on Path(root, y)
    bool is_ancestor(Vertex x, Vertex y) const {
        return pre_in[x] <= pre_in[y] && pre_out[y] <= pre_out[x];
    }

    bool is_strict_ancestor(Vertex x, Vertex y) const { return x != y && is_ancestor(x, y); }
};

/// Spanning outerplanar subgraph: DFS tree edges plus the accepted left/right
/// back edges. Back edges are stored oriented as (v, w) with w a proper
/// ancestor of v; tree edges as (child, parent).
struct OuterplanarGraph {
    Graph graph;
    std::vector<std::pair<Vertex, Vertex>> tree_edges;
    std::vector<std::pair<Vertex, Vertex>> left_edges;
    std::vector<std::pair<Vertex, Vertex>> right_edges;

    std::size_t back_edge_count() const { return left_edges.size() + right_edges.size(); }
};

/// Optional instrumentation captured during sampling.
struct SampleTrace {
    DfsState dfs;
    std::uint64_t stack_pushes = 0;
    std::uint64_t stack_pops = 0;
};

/// DFS from a seed-chosen random root with seed-shuffled neighbor order.
/// Throws ArgumentError if the graph is empty or disconnected.
DfsState dfs_decompose(const Graph& g, std::uint64_t seed);

/// Same, with the root pinned (neighbor order still seed-shuffled).
DfsState dfs_decompose_rooted(const Graph& g, Vertex root, std::uint64_t seed);

/// Random near-maximal outerplanar spanning subgraph in O(m) time.
/// Deterministic for a fixed (graph, seed).
OuterplanarGraph sample_outerplanar(const Graph& g, std::uint64_t seed,
                                    SampleTrace* trace = nullptr);

namespace detail {

/// Greedy back-edge insertion over a fixed DFS decomposition. Exposed for
/// white-box tests; `use_global_stack=false` applies the interior updates by
/// naive parent walks instead of the bireachable-vertex stack (quadratic, used
/// as a cross-check oracle).
struct SamplerEngine {
    static constexpr std::uint8_t kLeft = 1;
    static constexpr std::uint8_t kRight = 2;

    const Graph& g;
    const DfsState& dfs;
    bool use_global_stack = true;

    std::vector<std::uint8_t> reach;       // admissible sides
    std::vector<std::uint8_t> blocked;     // sigma flags, same bit layout
    std::vector<std::uint32_t> up_left;    // min depth of a valid left terminal
    std::vector<std::uint32_t> up_right;
    std::vector<Vertex> stack;             // bireachable vertices of the current root path
    std::uint64_t stack_pushes = 0;
    std::uint64_t stack_pops = 0;

    std::vector<std::pair<Vertex, Vertex>> left_edges;
    std::vector<std::pair<Vertex, Vertex>> right_edges;

    SamplerEngine(const Graph& graph, const DfsState& state, bool global_stack = true);

    void run();

    /// Processes one vertex of the current path: collects the back-edge
    /// candidates ending at proper ancestors and applies the add step.
    void process_vertex(Vertex v);

  private:
    void begin_path(std::size_t i);
    void add_edges(Vertex v, std::span<const Vertex> candidates);
    void apply_interior_update(Vertex x, std::uint8_t chosen_bit);

    std::vector<Vertex> candidate_buf_;
    std::vector<Vertex> accept_left_;
    std::vector<Vertex> accept_right_;
};

} // namespace detail

} // namespace gcore
