#pragma once

#include <vector>

#include "gcore/bb_tree.hpp"
#include "gcore/graph.hpp"
#include "gcore/vertex_set.hpp"

namespace gcore {

/// Closure over a tree: the node set of the minimal subtree spanning X,
/// computed by pruning leaves outside X. O(n). Empty X yields the empty set.
VertexSet tree_closure(const Graph& tree, const VertexSet& x);

/// Generator subset G_X of X within one block: at most three vertices per
/// interior face touching X, with the same closure as X inside the block.
std::vector<Vertex> generator_set(const Block& block, const VertexSet& x);

/// Closure of {u, w} within one interior face: the whole boundary when the
/// two are antipodal on the face cycle, otherwise the shorter boundary arc.
std::vector<Vertex> face_closure(const Block& block, std::size_t face_index, Vertex u, Vertex w);

/// Closure of X restricted to one block: pairwise geodesic intervals of the
/// generator set, one block-local BFS per generator.
VertexSet block_closure(const Block& block, const VertexSet& x);

/// Closure on a connected outerplanar graph in O(n * face number):
/// connect the touched BB-tree nodes by a tree closure, then close each
/// touched block via its generator set.
VertexSet outerplanar_closure(const Graph& g, const BBTree& tree, const VertexSet& x);
VertexSet outerplanar_closure(const Graph& g, const VertexSet& x);

/// Baseline for outerplanar graphs: union of pairwise geodesic intervals,
/// one BFS per element of X. O(m * |X|).
VertexSet closure_naive_outerplanar(const Graph& g, const VertexSet& x);

} // namespace gcore
