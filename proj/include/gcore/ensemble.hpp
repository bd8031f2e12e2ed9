#pragma once

#include <cstdint>
#include <vector>

#include "gcore/bb_tree.hpp"
#include "gcore/graph.hpp"
#include "gcore/sampler.hpp"
#include "gcore/vertex_set.hpp"

namespace gcore {

struct EnsembleConfig {
    std::size_t num_subgraphs = 100;
    double threshold_percent = 1.0; // vertex kept if voted in at least this share of samples
    std::uint64_t master_seed = 0;
    unsigned jobs = 1;
};

/// Fixed set of sampled outerplanar spanning subgraphs with prebuilt BB-trees.
/// Sampling happens once; closures over the ensemble are then O(n * f) each.
/// Sample i uses the derived seed (master_seed, i), so results do not depend
/// on the number of worker threads.
class Ensemble {
  public:
    Ensemble(const Graph& g, const EnsembleConfig& config);

    const EnsembleConfig& config() const { return config_; }
    std::size_t size() const { return samples_.size(); }
    const OuterplanarGraph& subgraph(std::size_t i) const { return samples_[i]; }
    const BBTree& bb_tree(std::size_t i) const { return trees_[i]; }

    /// Minimum number of per-sample closures a vertex must appear in
    /// ("at least t%", rounded up, never below one).
    std::size_t votes_required() const;
    std::size_t votes_required(double threshold_percent) const;

    /// Per-vertex count of sample closures containing it.
    std::vector<std::uint32_t> vote_counts(const VertexSet& x) const;

    /// Thresholded vote: the approximate closure of x.
    VertexSet closure(const VertexSet& x) const;
    VertexSet closure(const VertexSet& x, double threshold_percent) const;

  private:
    const Graph* graph_;
    EnsembleConfig config_;
    std::vector<OuterplanarGraph> samples_;
    std::vector<BBTree> trees_;
};

/// Ensemble vote approximation of the geodesic closure. Always contains x;
/// exact on outerplanar inputs (every sample keeps all edges).
VertexSet approximate_closure(const Graph& g, const VertexSet& x, const EnsembleConfig& config);

} // namespace gcore
