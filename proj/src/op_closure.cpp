#include "gcore/op_closure.hpp"

#include <algorithm>
#include <deque>

#include "gcore/detail/sweep.hpp"

namespace gcore {

namespace {

/// Leaf pruning shared by the public tree closure and the BB-tree step.
/// NeighborsFn(i) yields the neighbors of node i; returns keep flags.
template <typename NeighborsFn>
std::vector<std::uint8_t> prune_to_spanning_subtree(std::size_t n, NeighborsFn&& nbrs,
                                                    const std::vector<std::uint8_t>& in_set) {
    std::vector<std::uint32_t> degree(n, 0);
    std::vector<std::uint8_t> keep(n, 1);
    for (std::size_t i = 0; i < n; ++i) degree[i] = static_cast<std::uint32_t>(nbrs(i).size());

    std::deque<std::uint32_t> queue;
    for (std::size_t i = 0; i < n; ++i)
        if (degree[i] <= 1 && !in_set[i]) queue.push_back(static_cast<std::uint32_t>(i));
    while (!queue.empty()) {
        const std::uint32_t v = queue.front();
        queue.pop_front();
        if (!keep[v] || degree[v] > 1 || in_set[v]) continue;
        keep[v] = 0;
        for (std::uint32_t w : nbrs(v)) {
            if (!keep[w]) continue;
            if (--degree[w] <= 1 && !in_set[w]) queue.push_back(w);
        }
    }
    return keep;
}

/// Union of geodesic intervals between all pairs of `seeds` inside a block,
/// written into `out` as global vertex ids.
void block_pairwise_intervals(const Block& block, const std::vector<std::uint32_t>& seeds,
                              VertexSet& out) {
    const std::uint32_t len = static_cast<std::uint32_t>(block.size());
    std::vector<std::uint32_t> dist(len);
    std::vector<std::uint8_t> marks(len);
    std::vector<Vertex> order;
    std::deque<std::uint32_t> queue;

    for (std::uint32_t s : seeds) out.insert(block.vertex(s));
    for (std::uint32_t source : seeds) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        dist[source] = 0;
        queue.clear();
        queue.push_back(source);
        while (!queue.empty()) {
            const std::uint32_t p = queue.front();
            queue.pop_front();
            for (std::uint32_t q : block.neighbors_local(p)) {
                if (dist[q] == kUnreachable) {
                    dist[q] = dist[p] + 1;
                    queue.push_back(q);
                }
            }
        }
        std::fill(marks.begin(), marks.end(), 0);
        for (std::uint32_t s : seeds) marks[s] = 1;
        detail::sweep_shortest_path_union(
            len, [&](Vertex p) { return block.neighbors_local(p); }, dist, marks, order);
        for (std::uint32_t p = 0; p < len; ++p)
            if (marks[p]) out.insert(block.vertex(p));
    }
}

std::uint32_t face_distance(std::uint32_t i, std::uint32_t j, std::uint32_t len) {
    const std::uint32_t gap = i > j ? i - j : j - i;
    return std::min(gap, len - gap);
}

/// Closure of two positions within a face, as face-boundary indices.
void face_pair_closure(const Face& face, std::uint32_t fi, std::uint32_t fj,
                       std::vector<std::uint8_t>& marks) {
    const std::uint32_t len = static_cast<std::uint32_t>(face.length());
    std::fill(marks.begin(), marks.end(), 0);
    const std::uint32_t d = face_distance(fi, fj, len);
    if (2 * d == len) {
        std::fill(marks.begin(), marks.end(), 1);
        return;
    }
    // walk the shorter arc
    const std::uint32_t forward = (fj + len - fi) % len;
    if (forward == d) {
        for (std::uint32_t s = fi;; s = (s + 1) % len) {
            marks[s] = 1;
            if (s == fj) break;
        }
    } else {
        for (std::uint32_t s = fj;; s = (s + 1) % len) {
            marks[s] = 1;
            if (s == fi) break;
        }
    }
}

/// One face of the generator-set scan: appends at most three members of
/// X' = face ∩ X. Ties in the arg max go to the smallest vertex id.
void generator_candidates_for_face(const Block& block, const Face& face,
                                   const std::vector<std::uint32_t>& member_indices,
                                   std::vector<std::uint8_t>& marks,
                                   std::vector<Vertex>& out) {
    const std::uint32_t len = static_cast<std::uint32_t>(face.length());
    auto vertex_at = [&](std::uint32_t fidx) { return block.vertex(face.boundary[fidx]); };

    std::uint32_t w = member_indices.front();
    for (std::uint32_t m : member_indices)
        if (vertex_at(m) < vertex_at(w)) w = m;

    auto argmax_from = [&](auto&& allowed) {
        std::uint32_t best = w; // w always allowed, distance 0
        for (std::uint32_t m : member_indices) {
            if (!allowed(m)) continue;
            const std::uint32_t dm = face_distance(m, w, len);
            const std::uint32_t db = face_distance(best, w, len);
            if (dm > db || (dm == db && vertex_at(m) < vertex_at(best))) best = m;
        }
        return best;
    };

    const std::uint32_t u = argmax_from([](std::uint32_t) { return true; });
    marks.assign(len, 0);
    face_pair_closure(face, u, w, marks);
    const std::uint32_t v = argmax_from([&](std::uint32_t m) { return !marks[m]; });

    out.push_back(vertex_at(u));
    out.push_back(vertex_at(v));
    face_pair_closure(face, u, v, marks);
    if (!marks[w]) out.push_back(vertex_at(w));
}

} // namespace

VertexSet tree_closure(const Graph& tree, const VertexSet& x) {
    const std::size_t n = tree.vertex_count();
    if (x.universe_size() != n) throw ArgumentError("vertex set universe does not match graph");
    if (n == 0 || tree.edge_count() != n - 1)
        throw ArgumentError("tree closure requires a tree");
    VertexSet result(n);
    if (x.empty()) return result;

    std::vector<std::uint8_t> in_set(n, 0);
    x.for_each([&](Vertex v) { in_set[v] = 1; });
    auto keep =
        prune_to_spanning_subtree(n, [&](std::size_t v) { return tree.neighbors(static_cast<Vertex>(v)); }, in_set);
    for (Vertex v = 0; v < n; ++v)
        if (keep[v]) result.insert(v);
    return result;
}

std::vector<Vertex> generator_set(const Block& block, const VertexSet& x) {
    std::vector<Vertex> out;
    std::vector<std::uint32_t> members;
    std::vector<std::uint8_t> marks;
    for (const Face& face : block.faces()) {
        members.clear();
        for (std::uint32_t fidx = 0; fidx < face.length(); ++fidx)
            if (x.contains(block.vertex(face.boundary[fidx]))) members.push_back(fidx);
        if (members.empty()) continue;
        generator_candidates_for_face(block, face, members, marks, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Vertex> face_closure(const Block& block, std::size_t face_index, Vertex u, Vertex w) {
    if (face_index >= block.face_count()) throw ArgumentError("face index out of range");
    const Face& face = block.faces()[face_index];
    const std::uint32_t len = static_cast<std::uint32_t>(face.length());

    std::uint32_t fu = len, fw = len;
    for (std::uint32_t fidx = 0; fidx < len; ++fidx) {
        const Vertex v = block.vertex(face.boundary[fidx]);
        if (v == u) fu = fidx;
        if (v == w) fw = fidx;
    }
    if (fu == len || fw == len) throw ArgumentError("vertex not on the face boundary");

    std::vector<std::uint8_t> marks(len, 0);
    face_pair_closure(face, fu, fw, marks);
    std::vector<Vertex> out;
    for (std::uint32_t fidx = 0; fidx < len; ++fidx)
        if (marks[fidx]) out.push_back(block.vertex(face.boundary[fidx]));
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet block_closure(const Block& block, const VertexSet& x) {
    VertexSet result(x.universe_size());
    std::vector<std::uint32_t> inside;
    for (std::uint32_t p = 0; p < block.size(); ++p)
        if (x.contains(block.vertex(p))) inside.push_back(p);
    if (inside.size() <= 1) {
        for (std::uint32_t p : inside) result.insert(block.vertex(p));
        return result;
    }

    std::vector<Vertex> generators = generator_set(block, x);
    std::vector<std::uint32_t> seeds;
    seeds.reserve(generators.size());
    for (Vertex v : generators) seeds.push_back(*block.position_of(v));
    block_pairwise_intervals(block, seeds, result);
    return result;
}

VertexSet outerplanar_closure(const Graph& g, const BBTree& tree, const VertexSet& x) {
    const std::size_t n = g.vertex_count();
    if (x.universe_size() != n) throw ArgumentError("vertex set universe does not match graph");
    VertexSet result = x;
    if (x.size() <= 1) return result;

    // touched BB-tree nodes: blocks meeting X plus X's own tree nodes
    const std::size_t nn = tree.node_count();
    std::vector<std::uint8_t> in_set(nn, 0);
    for (std::size_t b = 0; b < tree.blocks.size(); ++b) {
        for (Vertex v : tree.blocks[b].cycle()) {
            if (x.contains(v)) {
                in_set[tree.block_node[b]] = 1;
                break;
            }
        }
    }
    x.for_each([&](Vertex v) {
        if (tree.vertex_node[v] != kNoNode) in_set[tree.vertex_node[v]] = 1;
    });

    auto keep = prune_to_spanning_subtree(
        nn, [&](std::size_t node) { return tree.node_neighbors(static_cast<std::uint32_t>(node)); },
        in_set);

    for (std::size_t node = 0; node < nn; ++node)
        if (keep[node] && tree.nodes[node].kind == BBTree::NodeKind::vertex)
            result.insert(tree.nodes[node].vertex);

    std::vector<std::uint32_t> inside;
    for (std::size_t b = 0; b < tree.blocks.size(); ++b) {
        if (!keep[tree.block_node[b]]) continue;
        const Block& block = tree.blocks[b];
        inside.clear();
        for (std::uint32_t p = 0; p < block.size(); ++p)
            if (result.contains(block.vertex(p))) inside.push_back(p);
        if (inside.size() <= 1) continue;

        // generator scan only inspects face-boundary vertices, so the running
        // result restricted to this block is exactly V(B) ∩ X_i
        std::vector<Vertex> generators = generator_set(block, result);
        std::vector<std::uint32_t> seeds;
        seeds.reserve(generators.size());
        for (Vertex v : generators) seeds.push_back(*block.position_of(v));
        block_pairwise_intervals(block, seeds, result);
    }
    return result;
}

VertexSet outerplanar_closure(const Graph& g, const VertexSet& x) {
    return outerplanar_closure(g, build_bb_tree(g), x);
}

VertexSet closure_naive_outerplanar(const Graph& g, const VertexSet& x) {
    const std::size_t n = g.vertex_count();
    if (x.universe_size() != n) throw ArgumentError("vertex set universe does not match graph");
    VertexSet result = x;
    if (x.size() <= 1) return result;

    std::vector<std::uint8_t> marks(n);
    std::vector<Vertex> order;
    x.for_each([&](Vertex u) {
        DistanceField dist = bfs_distances(g, u);
        std::fill(marks.begin(), marks.end(), 0);
        x.for_each([&](Vertex v) {
            if (dist.hops[v] != kUnreachable) marks[v] = 1;
        });
        detail::sweep_shortest_path_union(
            n, [&](Vertex y) { return g.neighbors(y); }, dist.hops, marks, order);
        for (std::size_t v = 0; v < n; ++v)
            if (marks[v]) result.insert(static_cast<Vertex>(v));
    });
    return result;
}

} // namespace gcore
