#include "gcore/outerplanar_check.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>

#include "gcore/detail/biconnected.hpp"
#include "gcore/detail/faces.hpp"

namespace gcore {

namespace detail {

std::vector<Vertex> recover_hamiltonian_cycle(const std::vector<std::vector<Vertex>>& adj) {
    const std::size_t k = adj.size();
    if (k < 3) return {};

    // mutable copy with membership helpers
    std::vector<std::vector<Vertex>> nb = adj;
    auto has = [&](Vertex a, Vertex b) {
        return std::find(nb[a].begin(), nb[a].end(), b) != nb[a].end();
    };
    auto drop = [&](Vertex a, Vertex b) {
        auto it = std::find(nb[a].begin(), nb[a].end(), b);
        if (it != nb[a].end()) {
            *it = nb[a].back();
            nb[a].pop_back();
        }
    };

    struct Removal {
        Vertex v, a, b;
    };
    std::vector<Removal> removals;
    std::vector<std::uint8_t> active(k, 1);
    std::size_t active_count = k;

    std::deque<Vertex> queue;
    for (Vertex v = 0; v < k; ++v)
        if (nb[v].size() == 2) queue.push_back(v);

    // contract degree-2 vertices until a triangle remains
    while (active_count > 3) {
        if (queue.empty()) return {}; // minimum degree 3: not outerplanar
        const Vertex v = queue.front();
        queue.pop_front();
        if (!active[v] || nb[v].size() != 2) continue;
        const Vertex a = nb[v][0];
        const Vertex b = nb[v][1];
        active[v] = 0;
        --active_count;
        drop(a, v);
        drop(b, v);
        if (!has(a, b)) {
            nb[a].push_back(b);
            nb[b].push_back(a);
        }
        removals.push_back({v, a, b});
        if (nb[a].size() == 2) queue.push_back(a);
        if (nb[b].size() == 2) queue.push_back(b);
        if (nb[a].size() < 2 || nb[b].size() < 2) return {};
    }

    Vertex tri[3];
    std::size_t t = 0;
    for (Vertex v = 0; v < k; ++v)
        if (active[v]) tri[t++] = v;
    if (!has(tri[0], tri[1]) || !has(tri[1], tri[2]) || !has(tri[2], tri[0])) return {};

    // expand in reverse removal order; each removed vertex splices back into
    // the (then-cycle) edge between its two neighbors
    std::vector<Vertex> succ(k, kNoVertex), pred(k, kNoVertex);
    succ[tri[0]] = tri[1];
    succ[tri[1]] = tri[2];
    succ[tri[2]] = tri[0];
    pred[tri[1]] = tri[0];
    pred[tri[2]] = tri[1];
    pred[tri[0]] = tri[2];
    for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
        Vertex a = it->a, b = it->b;
        if (succ[a] != b) std::swap(a, b);
        if (succ[a] != b) return {};
        succ[a] = it->v;
        succ[it->v] = b;
        pred[b] = it->v;
        pred[it->v] = a;
    }

    std::vector<Vertex> cycle;
    cycle.reserve(k);
    Vertex v = tri[0];
    do {
        cycle.push_back(v);
        v = succ[v];
    } while (v != tri[0] && cycle.size() <= k);
    if (cycle.size() != k) return {};
    for (std::size_t i = 0; i < k; ++i) {
        const Vertex x = cycle[i];
        const Vertex y = cycle[(i + 1) % k];
        if (std::find(adj[x].begin(), adj[x].end(), y) == adj[x].end()) return {};
    }
    return cycle;
}

bool is_outerplanar_adjacency(const std::vector<std::vector<Vertex>>& adj,
                              std::size_t edge_count) {
    const std::size_t n = adj.size();
    if (n >= 2 && edge_count > 2 * n - 3) return false;

    auto comps = biconnected_components(
        n, [&](Vertex v) -> const std::vector<Vertex>& { return adj[v]; });
    for (const auto& comp : comps) {
        if (comp.size() <= 1) continue; // bridge
        // local indexing
        std::unordered_map<Vertex, Vertex> local;
        std::vector<std::vector<Vertex>> ladj;
        auto intern = [&](Vertex v) {
            auto [it, fresh] = local.emplace(v, static_cast<Vertex>(ladj.size()));
            if (fresh) ladj.emplace_back();
            return it->second;
        };
        for (auto [u, v] : comp) {
            Vertex lu = intern(u), lv = intern(v);
            ladj[lu].push_back(lv);
            ladj[lv].push_back(lu);
        }
        if (comp.size() > 2 * ladj.size() - 3) return false;
        auto cycle = recover_hamiltonian_cycle(ladj);
        if (cycle.empty()) return false;

        const std::uint32_t len = static_cast<std::uint32_t>(cycle.size());
        std::vector<std::uint32_t> pos(ladj.size());
        for (std::uint32_t i = 0; i < len; ++i) pos[cycle[i]] = i;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> chords;
        for (auto [u, v] : comp) {
            std::uint32_t i = pos[local[u]], j = pos[local[v]];
            if (i > j) std::swap(i, j);
            if (j - i == 1 || (i == 0 && j == len - 1)) continue; // cycle edge
            chords.emplace_back(i, j);
        }
        if (!detail::enumerate_faces_positions(len, chords)) return false;
    }
    return true;
}

} // namespace detail

bool is_outerplanar(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        adj[v].assign(nb.begin(), nb.end());
    }
    return detail::is_outerplanar_adjacency(adj, g.edge_count());
}

namespace {

// no K4 minor <=> the graph reduces to nothing by removing degree-<=2
// vertices (joining the two neighbors of a degree-2 vertex)
bool has_k4_minor(std::vector<std::vector<Vertex>> nb) {
    const std::size_t n = nb.size();
    auto has = [&](Vertex a, Vertex b) {
        return std::find(nb[a].begin(), nb[a].end(), b) != nb[a].end();
    };
    auto drop = [&](Vertex a, Vertex b) {
        auto it = std::find(nb[a].begin(), nb[a].end(), b);
        if (it != nb[a].end()) {
            *it = nb[a].back();
            nb[a].pop_back();
        }
    };
    std::vector<std::uint8_t> active(n, 1);
    std::size_t active_count = n;
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < n; ++v)
        if (nb[v].size() <= 2) queue.push_back(v);
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        if (!active[v] || nb[v].size() > 2) continue;
        active[v] = 0;
        --active_count;
        std::vector<Vertex> ns = nb[v];
        for (Vertex w : ns) drop(w, v);
        nb[v].clear();
        if (ns.size() == 2 && !has(ns[0], ns[1])) {
            nb[ns[0]].push_back(ns[1]);
            nb[ns[1]].push_back(ns[0]);
        }
        for (Vertex w : ns)
            if (active[w] && nb[w].size() <= 2) queue.push_back(w);
    }
    return active_count > 0;
}

// three internally vertex-disjoint a-b paths of length >= 2, via unit-capacity
// flow with split vertices and the direct a-b edge removed
bool has_k23_minor(const std::vector<std::vector<Vertex>>& adj) {
    const std::size_t n = adj.size();
    if (n < 5) return false;

    struct Edge {
        std::uint32_t to;
        std::int32_t cap;
        std::uint32_t rev;
    };
    for (Vertex a = 0; a + 1 < n; ++a) {
        if (adj[a].size() < 3) continue;
        for (Vertex b = a + 1; b < n; ++b) {
            if (adj[b].size() < 3) continue;

            // nodes: 2v = in(v), 2v+1 = out(v); a,b are unsplit via large caps
            std::vector<std::vector<Edge>> net(2 * n);
            auto add_edge = [&](std::uint32_t from, std::uint32_t to, std::int32_t cap) {
                net[from].push_back({to, cap, static_cast<std::uint32_t>(net[to].size())});
                net[to].push_back({from, 0, static_cast<std::uint32_t>(net[from].size() - 1)});
            };
            for (Vertex v = 0; v < n; ++v)
                add_edge(2 * v, 2 * v + 1, (v == a || v == b) ? 8 : 1);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v : adj[u]) {
                    if ((u == a && v == b) || (u == b && v == a)) continue; // paths must be longer than the edge itself
                    add_edge(2 * u + 1, 2 * v, 1);
                }

            const std::uint32_t source = 2 * a + 1, sink = 2 * b;
            std::int32_t flow = 0;
            std::vector<std::pair<std::uint32_t, std::uint32_t>> pred(2 * n);
            while (flow < 3) {
                std::fill(pred.begin(), pred.end(),
                          std::make_pair(0xffffffffu, 0u));
                std::deque<std::uint32_t> bfs{source};
                pred[source] = {source, 0};
                bool reached = false;
                while (!bfs.empty() && !reached) {
                    const std::uint32_t x = bfs.front();
                    bfs.pop_front();
                    for (std::uint32_t ei = 0; ei < net[x].size(); ++ei) {
                        const Edge& e = net[x][ei];
                        if (e.cap <= 0 || pred[e.to].first != 0xffffffffu) continue;
                        pred[e.to] = {x, ei};
                        if (e.to == sink) {
                            reached = true;
                            break;
                        }
                        bfs.push_back(e.to);
                    }
                }
                if (!reached) break;
                for (std::uint32_t x = sink; x != source;) {
                    auto [px, pei] = pred[x];
                    Edge& e = net[px][pei];
                    e.cap -= 1;
                    net[x][e.rev].cap += 1;
                    x = px;
                }
                ++flow;
            }
            if (flow >= 3) return true;
        }
    }
    return false;
}

} // namespace

bool is_outerplanar_oracle(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kOracleVertexLimit)
        throw ArgumentError("outerplanarity oracle is limited to small graphs");
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        adj[v].assign(nb.begin(), nb.end());
    }
    if (has_k4_minor(adj)) return false;
    if (has_k23_minor(adj)) return false;
    return true;
}

MaximalityReport maximality_deficit(const Graph& g, const OuterplanarGraph& h) {
    const std::size_t n = g.vertex_count();
    if (h.graph.vertex_count() != n)
        throw ArgumentError("sample does not span the input graph");
    for (auto [u, v] : h.graph.edges())
        if (!g.has_edge(u, v)) throw ArgumentError("sample is not a subgraph of the input graph");

    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v) {
        auto nb = h.graph.neighbors(v);
        adj[v].assign(nb.begin(), nb.end());
    }
    const std::size_t base_edges = h.graph.edge_count();
    std::size_t current = base_edges;
    std::size_t added = 0;

    auto insert_sorted = [](std::vector<Vertex>& list, Vertex v) {
        list.insert(std::upper_bound(list.begin(), list.end(), v), v);
    };
    auto remove_sorted = [](std::vector<Vertex>& list, Vertex v) {
        list.erase(std::lower_bound(list.begin(), list.end(), v));
    };

    for (auto [u, v] : g.edges()) {
        if (std::binary_search(adj[u].begin(), adj[u].end(), v)) continue;
        insert_sorted(adj[u], v);
        insert_sorted(adj[v], u);
        if (detail::is_outerplanar_adjacency(adj, current + 1)) {
            ++current;
            ++added;
        } else {
            remove_sorted(adj[u], v);
            remove_sorted(adj[v], u);
        }
    }

    MaximalityReport report;
    report.addable_edges = added;
    report.relative_maximality =
        (base_edges + added) == 0
            ? 100.0
            : 100.0 * static_cast<double>(base_edges) / static_cast<double>(base_edges + added);
    return report;
}

} // namespace gcore
