#pragma once

#include <cstddef>
#include <vector>

#include "gcore/graph.hpp"
#include "gcore/sampler.hpp"

namespace gcore {

/// Linear-time outerplanarity test: decomposes into biconnected components
/// and validates each block as a Hamiltonian cycle plus non-crossing chords.
bool is_outerplanar(const Graph& g);

/// Independent test oracle. Outerplanar iff no K4 minor (checked by a
/// series-parallel style degree-<=2 reduction) and no K2,3 minor (checked by
/// max-flow: three internally vertex-disjoint paths of length >= 2 between
/// some vertex pair). Throws ArgumentError for graphs over the size limit.
bool is_outerplanar_oracle(const Graph& g);

inline constexpr std::size_t kOracleVertexLimit = 64;

struct MaximalityReport {
    std::size_t addable_edges = 0;       // input edges greedily addable to the sample
    double relative_maximality = 100.0;  // |E(H)| / (|E(H)| + addable), percent
};

/// Greedily re-adds input edges to the sampled subgraph, testing
/// outerplanarity after each addition. O(n*m); meant for evaluation scale.
MaximalityReport maximality_deficit(const Graph& g, const OuterplanarGraph& h);

namespace detail {

/// Recovers the unique Hamiltonian cycle of a biconnected outerplanar block
/// given as local adjacency lists. Empty result if the block is not
/// biconnected-outerplanar. Chord non-crossing is not checked here.
std::vector<Vertex> recover_hamiltonian_cycle(const std::vector<std::vector<Vertex>>& adj);

bool is_outerplanar_adjacency(const std::vector<std::vector<Vertex>>& adj,
                              std::size_t edge_count);

} // namespace detail

} // namespace gcore
