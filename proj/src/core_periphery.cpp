#include "gcore/core_periphery.hpp"

#include <chrono>

#include "gcore/closure.hpp"
#include "gcore/rng.hpp"

namespace gcore {

namespace {

VertexSet random_seed_set(const Graph& g, std::uint64_t master_seed, std::size_t draw_index,
                          std::size_t count) {
    // one derived seed per draw, so exact and approximate runs with equal
    // seed-set sizes see identical draws
    Rng rng(derive_seed(master_seed, draw_index));
    const auto n = static_cast<std::uint32_t>(g.vertex_count());
    VertexSet x(n);
    for (std::uint32_t v : rng.sample_distinct(n, static_cast<std::uint32_t>(count))) x.insert(v);
    return x;
}

constexpr std::size_t kNoDrawCap = 0;

template <typename ClosureFn>
CoreResult core_fixed_point(const Graph& g, const CoreConfig& config, std::size_t seed_set_size,
                            std::size_t draw_cap, ClosureFn&& closure_of_draw) {
    if (g.vertex_count() == 0) throw ArgumentError("core of an empty graph");
    if (seed_set_size == 0) throw ArgumentError("seed-set size must be positive");
    if (draw_cap != kNoDrawCap && draw_cap < 1) throw ArgumentError("draw budget must be positive");
    const auto start = std::chrono::steady_clock::now();

    CoreResult result;
    VertexSet x1 = random_seed_set(g, config.master_seed, 1, seed_set_size);
    VertexSet intersection = closure_of_draw(x1);
    result.closure_sizes.push_back(intersection.size());
    result.intersection_sizes.push_back(intersection.size());

    for (std::size_t j = 2;; ++j) {
        if (draw_cap != kNoDrawCap && j > draw_cap) {
            result.iterations = draw_cap;
            break;
        }
        VertexSet xj = random_seed_set(g, config.master_seed, j, seed_set_size);
        VertexSet cj = closure_of_draw(xj);
        result.closure_sizes.push_back(cj.size());
        const std::size_t before = intersection.size();
        intersection.intersect_with(cj);
        result.intersection_sizes.push_back(intersection.size());
        if (intersection.size() == before) { // subset chain: equal size means equal set
            result.iterations = j - 1;
            break;
        }
        if (j - 1 >= config.max_iterations) {
            result.core = std::move(intersection);
            result.iterations = j - 1;
            throw CoreIterationLimitError("core intersection did not stabilize within " +
                                              std::to_string(config.max_iterations) +
                                              " iterations",
                                          std::move(result));
        }
    }
    result.core = std::move(intersection);
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
}

} // namespace

CoreResult exact_core(const Graph& g, const CoreConfig& config) {
    return core_fixed_point(g, config, config.k, kNoDrawCap,
                            [&](const VertexSet& x) { return closure_exact(g, x); });
}

CoreResult approximate_core(const Graph& g, const CoreConfig& config) {
    EnsembleConfig ensemble_config = config.ensemble;
    ensemble_config.master_seed = derive_seed(config.master_seed, 0x5eed5);
    Ensemble ensemble(g, ensemble_config);
    return core_fixed_point(g, config, config.l, config.approx_draws,
                            [&](const VertexSet& x) { return ensemble.closure(x); });
}

double jaccard(const VertexSet& a, const VertexSet& b) {
    const std::size_t inter = a.intersection_size(b);
    const std::size_t uni = a.size() + b.size() - inter;
    if (uni == 0) return 1.0;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<GridPoint> approximate_core_grid(const Graph& g, const CoreConfig& base,
                                             const std::vector<std::size_t>& l_values,
                                             const std::vector<double>& threshold_values,
                                             const VertexSet& reference_core) {
    EnsembleConfig ensemble_config = base.ensemble;
    ensemble_config.master_seed = derive_seed(base.master_seed, 0x5eed5);
    Ensemble ensemble(g, ensemble_config);

    std::vector<GridPoint> out;
    for (std::size_t l : l_values) {
        for (double t : threshold_values) {
            CoreResult r =
                core_fixed_point(g, base, l, base.approx_draws,
                                 [&](const VertexSet& x) { return ensemble.closure(x, t); });
            out.push_back({l, t, jaccard(r.core, reference_core), r.core.size(), r.iterations});
        }
    }
    return out;
}

} // namespace gcore
