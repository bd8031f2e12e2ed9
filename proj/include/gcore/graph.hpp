#pragma once

#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gcore/errors.hpp"
#include "gcore/vertex_set.hpp"

namespace gcore {

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Vertex ids are dense 0..n-1; neighbor lists are sorted, so iteration order
/// is deterministic. Original input labels are kept for I/O.
class Graph {
  public:
    Graph() = default;

    /// Build from (possibly directed/duplicated) dense edge list. Self-loops
    /// are dropped, edges are symmetrized and deduplicated. `labels` maps
    /// dense id -> original label; if empty, labels are the ids themselves.
    Graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges,
          std::vector<std::int64_t> labels = {});

    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return adjacency_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v],
                adjacency_.data() + offsets_[v + 1]};
    }

    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    bool has_edge(Vertex u, Vertex v) const;

    std::int64_t label(Vertex v) const { return labels_[v]; }

    std::optional<Vertex> vertex_for_label(std::int64_t label) const {
        auto it = label_to_id_.find(label);
        if (it == label_to_id_.end()) return std::nullopt;
        return it->second;
    }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool same_labeled_edges(const Graph& other) const;

  private:
    std::vector<std::uint64_t> offsets_;
    std::vector<Vertex> adjacency_;
    std::vector<std::int64_t> labels_;
    std::unordered_map<std::int64_t, Vertex> label_to_id_;
};

/// Hop distances from a single source; kUnreachable marks disconnected vertices.
struct DistanceField {
    Vertex source = kNoVertex;
    std::vector<std::uint32_t> hops;
};

/// Reads a SNAP-style edge list: '#' comment lines, two whitespace-separated
/// integer labels per data line. Labels are remapped to dense ids in order of
/// first appearance.
Graph parse_edge_list(std::istream& in);

void write_edge_list(const Graph& g, std::ostream& out);

/// Induced subgraph on the largest connected component, ids re-densified
/// (ties broken by smallest member id). Original labels are preserved.
Graph largest_component(const Graph& g);

DistanceField bfs_distances(const Graph& g, Vertex source);

/// Full-graph degrees of the members of `set`, as degree -> count.
std::map<std::size_t, std::size_t> degree_distribution(const Graph& g, const VertexSet& set);

} // namespace gcore
