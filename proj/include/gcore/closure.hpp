#pragma once

#include "gcore/graph.hpp"
#include "gcore/vertex_set.hpp"

namespace gcore {

/// All vertices on all shortest u-v paths (two BFS passes worth of work).
VertexSet geodesic_interval(const Graph& g, Vertex u, Vertex v);

/// Smallest geodesically closed superset of X. FIFO worklist: each element u
/// of the growing set is processed once with a single BFS from u, adding all
/// vertices on shortest paths from u into the current set. O(n*m) overall.
VertexSet closure_exact(const Graph& g, const VertexSet& x);

} // namespace gcore
