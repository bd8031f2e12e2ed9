#include "gcore/ensemble.hpp"

#include <cmath>
#include <thread>

#include "gcore/op_closure.hpp"
#include "gcore/rng.hpp"

namespace gcore {

namespace {

void check_config(const EnsembleConfig& config) {
    if (config.num_subgraphs == 0) throw ArgumentError("ensemble needs at least one subgraph");
    if (!(config.threshold_percent > 0.0) || config.threshold_percent > 100.0)
        throw ArgumentError("vote threshold must be in (0, 100]");
}

template <typename Fn>
void run_indexed_jobs(std::size_t count, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i, 0);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += workers) fn(i, t);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace

Ensemble::Ensemble(const Graph& g, const EnsembleConfig& config)
    : graph_(&g), config_(config) {
    check_config(config_);
    const std::size_t count = config_.num_subgraphs;
    samples_.resize(count);
    trees_.resize(count);
    run_indexed_jobs(count, config_.jobs, [&](std::size_t i, unsigned) {
        samples_[i] = sample_outerplanar(g, derive_seed(config_.master_seed, i));
        trees_[i] = build_bb_tree(samples_[i].graph);
    });
}

std::size_t Ensemble::votes_required() const {
    return votes_required(config_.threshold_percent);
}

std::size_t Ensemble::votes_required(double threshold_percent) const {
    if (!(threshold_percent > 0.0) || threshold_percent > 100.0)
        throw ArgumentError("vote threshold must be in (0, 100]");
    const double exact = threshold_percent * static_cast<double>(size()) / 100.0;
    auto needed = static_cast<std::size_t>(std::ceil(exact - 1e-9));
    return needed == 0 ? 1 : needed;
}

std::vector<std::uint32_t> Ensemble::vote_counts(const VertexSet& x) const {
    const std::size_t n = graph_->vertex_count();
    if (x.universe_size() != n) throw ArgumentError("vertex set universe does not match graph");

    const unsigned workers =
        config_.jobs <= 1 ? 1 : static_cast<unsigned>(std::min<std::size_t>(config_.jobs, size()));
    std::vector<std::vector<std::uint32_t>> partial(workers,
                                                    std::vector<std::uint32_t>(n, 0));
    run_indexed_jobs(size(), config_.jobs, [&](std::size_t i, unsigned worker) {
        VertexSet closed = outerplanar_closure(samples_[i].graph, trees_[i], x);
        auto& votes = partial[worker];
        closed.for_each([&](Vertex v) { ++votes[v]; });
    });

    std::vector<std::uint32_t>& total = partial.front();
    for (unsigned t = 1; t < workers; ++t)
        for (std::size_t v = 0; v < n; ++v) total[v] += partial[t][v];
    return std::move(total);
}

VertexSet Ensemble::closure(const VertexSet& x) const {
    return closure(x, config_.threshold_percent);
}

VertexSet Ensemble::closure(const VertexSet& x, double threshold_percent) const {
    const std::vector<std::uint32_t> votes = vote_counts(x);
    const std::size_t needed = votes_required(threshold_percent);
    VertexSet result(graph_->vertex_count());
    for (std::size_t v = 0; v < votes.size(); ++v)
        if (votes[v] >= needed) result.insert(static_cast<Vertex>(v));
    return result;
}

VertexSet approximate_closure(const Graph& g, const VertexSet& x, const EnsembleConfig& config) {
    Ensemble ensemble(g, config);
    return ensemble.closure(x);
}

} // namespace gcore
