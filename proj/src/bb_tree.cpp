#include "gcore/bb_tree.hpp"

#include <algorithm>
#include <unordered_map>

#include "gcore/detail/biconnected.hpp"
#include "gcore/detail/faces.hpp"
#include "gcore/outerplanar_check.hpp"

namespace gcore {

Block::Block(std::vector<Vertex> cycle, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : cycle_(std::move(cycle)) {
    const std::uint32_t len = static_cast<std::uint32_t>(cycle_.size());

    position_index_.reserve(len);
    for (std::uint32_t i = 0; i < len; ++i) position_index_.emplace_back(cycle_[i], i);
    std::sort(position_index_.begin(), position_index_.end());

    std::vector<std::pair<std::uint32_t, std::uint32_t>> local_edges;
    local_edges.reserve(edges.size());
    for (auto [u, v] : edges) {
        auto pu = position_of(u), pv = position_of(v);
        if (!pu || !pv) throw ArgumentError("block edge endpoint not on cycle");
        std::uint32_t i = *pu, j = *pv;
        if (i > j) std::swap(i, j);
        local_edges.emplace_back(i, j);
        if (j - i != 1 && !(i == 0 && j == len - 1)) chords_.emplace_back(i, j);
    }

    auto faces = detail::enumerate_faces_positions(len, chords_);
    if (!faces) throw NotOuterplanarError("crossing chords in a block");
    faces_.reserve(faces->size());
    for (auto& positions : *faces) faces_.push_back(Face{std::move(positions)});

    offsets_.assign(len + 1, 0);
    for (auto [i, j] : local_edges) {
        ++offsets_[i + 1];
        ++offsets_[j + 1];
    }
    for (std::uint32_t p = 0; p < len; ++p) offsets_[p + 1] += offsets_[p];
    adjacency_.resize(local_edges.size() * 2);
    std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (auto [i, j] : local_edges) {
        adjacency_[cursor[i]++] = j;
        adjacency_[cursor[j]++] = i;
    }
    for (std::uint32_t p = 0; p < len; ++p)
        std::sort(adjacency_.begin() + offsets_[p], adjacency_.begin() + offsets_[p + 1]);
}

std::optional<std::uint32_t> Block::position_of(Vertex v) const {
    auto it = std::lower_bound(position_index_.begin(), position_index_.end(),
                               std::make_pair(v, std::uint32_t{0}));
    if (it == position_index_.end() || it->first != v) return std::nullopt;
    return it->second;
}

BBTree build_bb_tree(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw ArgumentError("cannot build a BB-tree for an empty graph");

    {
        DistanceField reach = bfs_distances(g, 0);
        for (Vertex v = 0; v < n; ++v)
            if (reach.hops[v] == kUnreachable)
                throw ArgumentError("graph is disconnected; take the largest component first");
    }

    BBTree tree;
    auto comps =
        detail::biconnected_components(n, [&](Vertex v) { return g.neighbors(v); });

    std::vector<std::uint32_t> membership(n, 0); // number of biconnected components containing v
    std::vector<std::uint8_t> in_block(n, 0);
    std::vector<std::vector<std::pair<Vertex, Vertex>>> block_edges;
    std::vector<Vertex> scratch;

    for (auto& comp : comps) {
        scratch.clear();
        for (auto [u, v] : comp) {
            scratch.push_back(u);
            scratch.push_back(v);
        }
        std::sort(scratch.begin(), scratch.end());
        scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
        for (Vertex v : scratch) ++membership[v];
        if (comp.size() == 1) {
            tree.bridges.push_back(comp.front());
        } else {
            for (Vertex v : scratch) in_block[v] = 1;
            block_edges.push_back(std::move(comp));
        }
    }

    // retained original vertices: not interior to a single block
    tree.vertex_node.assign(n, kNoNode);
    for (Vertex v = 0; v < n; ++v) {
        const bool retained = !in_block[v] || membership[v] >= 2;
        if (retained) {
            tree.vertex_node[v] = static_cast<std::uint32_t>(tree.nodes.size());
            tree.nodes.push_back({BBTree::NodeKind::vertex, v, 0});
        }
    }

    tree.blocks.reserve(block_edges.size());
    tree.block_node.reserve(block_edges.size());
    for (auto& edges : block_edges) {
        std::unordered_map<Vertex, Vertex> local;
        std::vector<std::vector<Vertex>> ladj;
        std::vector<Vertex> order;
        auto intern = [&](Vertex v) {
            auto [it, fresh] = local.emplace(v, static_cast<Vertex>(ladj.size()));
            if (fresh) {
                ladj.emplace_back();
                order.push_back(v);
            }
            return it->second;
        };
        for (auto [u, v] : edges) {
            Vertex lu = intern(u), lv = intern(v);
            ladj[lu].push_back(lv);
            ladj[lv].push_back(lu);
        }
        auto local_cycle = detail::recover_hamiltonian_cycle(ladj);
        if (local_cycle.empty())
            throw NotOuterplanarError("block has no Hamiltonian outer cycle");
        std::vector<Vertex> cycle(local_cycle.size());
        for (std::size_t i = 0; i < local_cycle.size(); ++i) cycle[i] = order[local_cycle[i]];

        tree.block_node.push_back(static_cast<std::uint32_t>(tree.nodes.size()));
        tree.nodes.push_back(
            {BBTree::NodeKind::block, kNoVertex, static_cast<std::uint32_t>(tree.blocks.size())});
        tree.blocks.emplace_back(std::move(cycle), edges);
    }

    // tree edges: bridges between vertex nodes, plus block-to-vertex links
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tree_edges;
    for (auto [u, v] : tree.bridges)
        tree_edges.emplace_back(tree.vertex_node[u], tree.vertex_node[v]);
    for (std::size_t b = 0; b < tree.blocks.size(); ++b)
        for (Vertex v : tree.blocks[b].cycle())
            if (tree.vertex_node[v] != kNoNode)
                tree_edges.emplace_back(tree.block_node[b], tree.vertex_node[v]);

    const std::size_t nn = tree.nodes.size();
    tree.adj_offsets.assign(nn + 1, 0);
    for (auto [a, b] : tree_edges) {
        ++tree.adj_offsets[a + 1];
        ++tree.adj_offsets[b + 1];
    }
    for (std::size_t i = 0; i < nn; ++i) tree.adj_offsets[i + 1] += tree.adj_offsets[i];
    tree.adjacency.resize(tree_edges.size() * 2);
    std::vector<std::uint32_t> cursor(tree.adj_offsets.begin(), tree.adj_offsets.end() - 1);
    for (auto [a, b] : tree_edges) {
        tree.adjacency[cursor[a]++] = b;
        tree.adjacency[cursor[b]++] = a;
    }

    if (tree_edges.size() + 1 != nn)
        throw Error("internal: BB-tree construction produced a non-tree");
    return tree;
}

BBTree build_bb_tree(const OuterplanarGraph& h) { return build_bb_tree(h.graph); }

std::size_t face_number(const BBTree& tree) {
    std::size_t best = 0;
    for (const auto& block : tree.blocks) best = std::max(best, block.face_count());
    return best;
}

std::size_t face_number(const Graph& g) { return face_number(build_bb_tree(g)); }

void dump_blocks(const Graph& g, const BBTree& tree, std::ostream& out) {
    for (const auto& block : tree.blocks) {
        out << "cycle:";
        for (Vertex v : block.cycle()) out << ' ' << g.label(v);
        out << " chords:";
        for (auto [i, j] : block.chords())
            out << ' ' << g.label(block.vertex(i)) << '-' << g.label(block.vertex(j));
        out << '\n';
    }
}

} // namespace gcore
