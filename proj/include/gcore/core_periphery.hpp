#pragma once

#include <cstdint>
#include <vector>

#include "gcore/ensemble.hpp"
#include "gcore/graph.hpp"
#include "gcore/vertex_set.hpp"

namespace gcore {

struct CoreConfig {
    std::size_t k = 10;               // seed-set size for exact closures
    std::size_t l = 5;                // seed-set size for approximate closures
    EnsembleConfig ensemble;          // subgraph count, vote threshold, jobs
    std::size_t max_iterations = 50;  // safeguard against non-convergence
    // Approximate closures never reach a stable running intersection on real
    // networks (votes near the threshold fluctuate between draws), so the
    // approximate core intersects at most this many draws. The fixpoint test
    // may stop earlier; raise to max_iterations for the pure fixpoint loop.
    std::size_t approx_draws = 3;
    std::uint64_t master_seed = 0;
};

struct CoreResult {
    VertexSet core;
    std::size_t iterations = 0;                  // smallest i with I_i == I_{i+1}
    std::vector<std::size_t> closure_sizes;      // |C_j| per draw
    std::vector<std::size_t> intersection_sizes; // |I_j| per draw
    double elapsed_ms = 0.0;
};

/// Raised when the running intersection keeps changing past max_iterations;
/// carries the state reached so far.
class CoreIterationLimitError : public Error {
  public:
    CoreIterationLimitError(std::string what, CoreResult partial)
        : Error(std::move(what)), partial_(std::move(partial)) {}

    const CoreResult& partial() const { return partial_; }

  private:
    CoreResult partial_;
};

/// Core = fixed point of the running intersection of closures of random
/// k-sets: stop at the smallest i with ∩_{j<=i} C_j = ∩_{j<=i+1} C_j.
CoreResult exact_core(const Graph& g, const CoreConfig& config);

/// Same fixed-point loop with ensemble-vote closures of random l-sets; the
/// sampled subgraphs are generated once and reused for every draw.
CoreResult approximate_core(const Graph& g, const CoreConfig& config);

/// |A ∩ B| / |A ∪ B|; defined as 1 when both sets are empty.
double jaccard(const VertexSet& a, const VertexSet& b);

struct GridPoint {
    std::size_t l = 0;
    double threshold_percent = 0.0;
    double jaccard = 0.0;
    std::size_t core_size = 0;
    std::size_t iterations = 0;
};

/// Sweeps (l, t) combinations over one shared ensemble and scores each
/// approximate core against a reference (typically the exact core).
std::vector<GridPoint> approximate_core_grid(const Graph& g, const CoreConfig& base,
                                             const std::vector<std::size_t>& l_values,
                                             const std::vector<double>& threshold_values,
                                             const VertexSet& reference_core);

} // namespace gcore
