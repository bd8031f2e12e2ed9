#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "gcore/graph.hpp"
#include "gcore/sampler.hpp"

namespace gcore {

inline constexpr std::uint32_t kNoNode = 0xffffffffu;

/// Interior face of a block; boundary holds positions into the block cycle,
/// in boundary-cycle order (consecutive entries joined by a cycle edge or a
/// chord, last joined back to first).
struct Face {
    std::vector<std::uint32_t> boundary;

    std::size_t length() const { return boundary.size(); }
};

/// Biconnected component of an outerplanar graph: its unique Hamiltonian
/// cycle plus non-crossing diagonals.
class Block {
  public:
    Block(std::vector<Vertex> cycle, const std::vector<std::pair<Vertex, Vertex>>& edges);

    std::size_t size() const { return cycle_.size(); }
    Vertex vertex(std::uint32_t position) const { return cycle_[position]; }
    const std::vector<Vertex>& cycle() const { return cycle_; }
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& chords() const { return chords_; }
    const std::vector<Face>& faces() const { return faces_; }
    std::size_t face_count() const { return faces_.size(); }

    std::optional<std::uint32_t> position_of(Vertex v) const;

    std::span<const std::uint32_t> neighbors_local(std::uint32_t position) const {
        return {adjacency_.data() + offsets_[position],
                adjacency_.data() + offsets_[position + 1]};
    }

  private:
    std::vector<Vertex> cycle_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> chords_;
    std::vector<Face> faces_;
    std::vector<std::uint32_t> offsets_;
    std::vector<std::uint32_t> adjacency_;
    std::vector<std::pair<Vertex, std::uint32_t>> position_index_; // sorted by vertex
};

/// Block-and-bridge tree. Nodes are the retained original vertices (those
/// incident to a bridge or lying in several biconnected components) plus one
/// node per block; edges are the bridges and the vertex-to-block links.
struct BBTree {
    enum class NodeKind : std::uint8_t { vertex, block };

    struct Node {
        NodeKind kind;
        Vertex vertex;        // valid for NodeKind::vertex
        std::uint32_t block;  // valid for NodeKind::block
    };

    std::vector<Node> nodes;
    std::vector<std::uint32_t> adj_offsets;
    std::vector<std::uint32_t> adjacency;
    std::vector<Block> blocks;
    std::vector<std::pair<Vertex, Vertex>> bridges;
    std::vector<std::uint32_t> vertex_node; // graph vertex -> node id or kNoNode
    std::vector<std::uint32_t> block_node;  // block index -> node id

    std::size_t node_count() const { return nodes.size(); }

    std::span<const std::uint32_t> node_neighbors(std::uint32_t node) const {
        return {adjacency.data() + adj_offsets[node],
                adjacency.data() + adj_offsets[node + 1]};
    }
};

/// Builds the BB-tree of a connected outerplanar graph, validating each block
/// (Hamiltonian cycle recovery plus non-crossing chords). Throws
/// NotOuterplanarError if validation fails, ArgumentError if disconnected.
BBTree build_bb_tree(const Graph& g);
BBTree build_bb_tree(const OuterplanarGraph& h);

/// Maximum interior-face count over the blocks; 0 for a tree.
std::size_t face_number(const BBTree& tree);
std::size_t face_number(const Graph& g);

/// Diagnostic dump, one block per line: cycle order, then chords.
void dump_blocks(const Graph& g, const BBTree& tree, std::ostream& out);

} // namespace gcore
