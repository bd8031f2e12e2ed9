#include "gcore/sampler.hpp"

#include <algorithm>
#include <cassert>

#include "gcore/rng.hpp"

namespace gcore {

namespace {

DfsState run_dfs(const Graph& g, Vertex root, std::uint64_t seed) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw ArgumentError("cannot run DFS on an empty graph");
    if (root >= n) throw ArgumentError("DFS root out of range");

    // shuffled copy of the adjacency, one contiguous block per vertex
    std::vector<std::uint64_t> offsets(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + g.degree(v);
    std::vector<Vertex> adj(offsets[n]);
    Rng rng(seed);
    for (Vertex v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        std::copy(nb.begin(), nb.end(), adj.begin() + static_cast<std::ptrdiff_t>(offsets[v]));
        rng.shuffle(std::span<Vertex>(adj.data() + offsets[v], nb.size()));
    }

    DfsState s;
    s.root = root;
    s.parent.assign(n, kNoVertex);
    s.depth.assign(n, 0);
    s.pre_in.assign(n, 0);
    s.pre_out.assign(n, 0);

    std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
    std::vector<std::uint8_t> visited(n, 0);
    std::vector<Vertex> frames;
    frames.reserve(64);

    std::uint32_t clock = 0;
    Vertex last_discovered = root;

    visited[root] = 1;
    s.pre_in[root] = clock++;
    frames.push_back(root);
    s.path_offsets.push_back(0);
    s.path_vertices.push_back(root);

    while (!frames.empty()) {
        const Vertex u = frames.back();
        bool descended = false;
        while (cursor[u] < offsets[u + 1]) {
            const Vertex w = adj[cursor[u]++];
            if (visited[w]) continue;
            visited[w] = 1;
            s.parent[w] = u;
            s.depth[w] = s.depth[u] + 1;
            s.pre_in[w] = clock++;
            if (last_discovered != u) {
                // backtracked since the previous discovery: new path from u
                s.path_offsets.push_back(static_cast<std::uint32_t>(s.path_vertices.size()));
                s.path_vertices.push_back(u);
            }
            s.path_vertices.push_back(w);
            last_discovered = w;
            frames.push_back(w);
            descended = true;
            break;
        }
        if (!descended) {
            s.pre_out[u] = clock++;
            frames.pop_back();
        }
    }
    s.path_offsets.push_back(static_cast<std::uint32_t>(s.path_vertices.size()));

    for (Vertex v = 0; v < n; ++v)
        if (!visited[v]) throw ArgumentError("graph is disconnected; take the largest component first");
    return s;
}

} // namespace

DfsState dfs_decompose(const Graph& g, std::uint64_t seed) {
    if (g.vertex_count() == 0) throw ArgumentError("cannot run DFS on an empty graph");
    Rng rng(derive_seed(seed, 0x726f6f74)); // root pick uses its own stream
    const Vertex root = static_cast<Vertex>(rng.below(g.vertex_count()));
    return run_dfs(g, root, seed);
}

DfsState dfs_decompose_rooted(const Graph& g, Vertex root, std::uint64_t seed) {
    return run_dfs(g, root, seed);
}

namespace detail {

SamplerEngine::SamplerEngine(const Graph& graph, const DfsState& state, bool global_stack)
    : g(graph), dfs(state), use_global_stack(global_stack) {
    const std::size_t n = g.vertex_count();
    reach.assign(n, 0);
    blocked.assign(n, 0);
    up_left.assign(n, 0);
    up_right.assign(n, 0);
    stack.reserve(64);
}

void SamplerEngine::apply_interior_update(Vertex x, std::uint8_t chosen_bit) {
    // x lies strictly inside an accepted span: the chosen side is gone for x,
    // later edges on the other side cannot end below x, and any path rooted at
    // x is barred from the chosen side.
    reach[x] &= static_cast<std::uint8_t>(~chosen_bit);
    if (chosen_bit == kLeft)
        up_right[x] = dfs.depth[x];
    else
        up_left[x] = dfs.depth[x];
    blocked[x] |= chosen_bit;
}

void SamplerEngine::begin_path(std::size_t i) {
    auto path = dfs.path(i);
    const Vertex head = path.front();

    reach[head] = kLeft | kRight;
    for (std::uint8_t bit : {kLeft, kRight}) {
        auto& up = (bit == kLeft) ? up_left : up_right;
        if ((blocked[head] & bit) || head == dfs.root)
            up[head] = dfs.depth[head];
        else
            up[head] = up[dfs.parent[head]];
    }

    if (use_global_stack) {
        // drop leftovers from the previous path; they sit in completed
        // subtrees and can never be back-edge terminals again
        while (!stack.empty() && dfs.depth[stack.back()] > dfs.depth[head]) {
            stack.pop_back();
            ++stack_pops;
        }
        if (stack.empty() || stack.back() != head) {
            stack.push_back(head);
            ++stack_pushes;
        }
    }
}

void SamplerEngine::add_edges(Vertex v, std::span<const Vertex> candidates) {
    accept_left_.clear();
    accept_right_.clear();
    for (Vertex w : candidates) {
        if ((reach[w] & kLeft) && up_left[v] <= dfs.depth[w]) accept_left_.push_back(w);
        if ((reach[w] & kRight) && up_right[v] <= dfs.depth[w]) accept_right_.push_back(w);
    }

    // larger side wins, ties go left
    const bool right_wins = accept_right_.size() > accept_left_.size();
    auto& accepted = right_wins ? accept_right_ : accept_left_;
    const std::uint8_t chosen_bit = right_wins ? kRight : kLeft;
    if (accepted.empty()) return;

    if (right_wins)
        up_left[v] = dfs.depth[dfs.parent[v]];
    else
        up_right[v] = dfs.depth[dfs.parent[v]];

    if (use_global_stack) {
        // all accepted spans share the start v, so the terminal of smallest
        // depth covers them; pop the bireachable vertices strictly inside it
        std::uint32_t min_depth = dfs.depth[accepted.front()];
        for (Vertex w : accepted) min_depth = std::min(min_depth, dfs.depth[w]);
        while (!stack.empty() && dfs.depth[stack.back()] > min_depth) {
            apply_interior_update(stack.back(), chosen_bit);
            stack.pop_back();
            ++stack_pops;
        }
    } else {
        for (Vertex w : accepted)
            for (Vertex x = dfs.parent[v]; x != w; x = dfs.parent[x])
                apply_interior_update(x, chosen_bit);
    }

    auto& out = right_wins ? right_edges : left_edges;
    for (Vertex w : accepted) out.emplace_back(v, w);
}

void SamplerEngine::process_vertex(Vertex v) {
    reach[v] = kLeft | kRight;
    up_left[v] = up_left[dfs.parent[v]];
    up_right[v] = up_right[dfs.parent[v]];

    candidate_buf_.clear();
    for (Vertex w : g.neighbors(v)) {
        if (w == dfs.parent[v]) continue;
        if (dfs.is_strict_ancestor(w, v)) candidate_buf_.push_back(w);
        else
            // Tremaux property: the only non-ancestor neighbors are
            // descendants, handled when they are processed themselves
            assert(dfs.is_ancestor(v, w));
    }
    add_edges(v, candidate_buf_);

    if (use_global_stack) {
        stack.push_back(v);
        ++stack_pushes;
    }
}

void SamplerEngine::run() {
    up_left[dfs.root] = 0;
    up_right[dfs.root] = 0;
    for (std::size_t i = 0; i < dfs.path_count(); ++i) {
        begin_path(i);
        auto path = dfs.path(i);
        for (std::size_t j = 1; j < path.size(); ++j) process_vertex(path[j]);
    }
}

} // namespace detail

OuterplanarGraph sample_outerplanar(const Graph& g, std::uint64_t seed, SampleTrace* trace) {
    DfsState dfs = dfs_decompose(g, seed);
    detail::SamplerEngine engine(g, dfs);
    engine.run();

    OuterplanarGraph out;
    const std::size_t n = g.vertex_count();
    out.tree_edges.reserve(n > 0 ? n - 1 : 0);
    for (Vertex v = 0; v < n; ++v)
        if (dfs.parent[v] != kNoVertex) out.tree_edges.emplace_back(v, dfs.parent[v]);
    out.left_edges = std::move(engine.left_edges);
    out.right_edges = std::move(engine.right_edges);

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(out.tree_edges.size() + out.back_edge_count());
    edges.insert(edges.end(), out.tree_edges.begin(), out.tree_edges.end());
    edges.insert(edges.end(), out.left_edges.begin(), out.left_edges.end());
    edges.insert(edges.end(), out.right_edges.begin(), out.right_edges.end());
    std::vector<std::int64_t> labels(n);
    for (Vertex v = 0; v < n; ++v) labels[v] = g.label(v);
    out.graph = Graph(n, std::move(edges), std::move(labels));

    if (trace) {
        trace->dfs = std::move(dfs);
        trace->stack_pushes = engine.stack_pushes;
        trace->stack_pops = engine.stack_pops;
    }
    return out;
}

} // namespace gcore
