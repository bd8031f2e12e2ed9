#include "gcore/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <string>

namespace gcore {

Graph::Graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges,
             std::vector<std::int64_t> labels) {
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n) throw ArgumentError("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : edges) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];

    adjacency_.resize(edges.size() * 2);
    std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        adjacency_[cursor[u]++] = v;
        adjacency_[cursor[v]++] = u;
    }
    // edges were sorted, which orders each list only by the low endpoint;
    // resort per vertex
    for (std::size_t v = 0; v < n; ++v)
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));

    if (labels.empty()) {
        labels_.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels_[i] = static_cast<std::int64_t>(i);
    } else {
        if (labels.size() != n) throw ArgumentError("label table size mismatch");
        labels_ = std::move(labels);
    }
    label_to_id_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, fresh] = label_to_id_.emplace(labels_[i], static_cast<Vertex>(i));
        (void)it;
        if (!fresh) throw ArgumentError("duplicate vertex label");
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::same_labeled_edges(const Graph& other) const {
    if (vertex_count() != other.vertex_count() || edge_count() != other.edge_count())
        return false;
    for (Vertex u = 0; u < vertex_count(); ++u) {
        auto ov = other.vertex_for_label(label(u));
        if (!ov) return false;
        for (Vertex v : neighbors(u)) {
            auto w = other.vertex_for_label(label(v));
            if (!w || !other.has_edge(*ov, *w)) return false;
        }
    }
    return true;
}

namespace {

std::int64_t parse_label(std::string_view token, std::size_t line_no) {
    std::int64_t value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError("expected integer vertex label, got '" + std::string(token) + "'",
                         line_no);
    return value;
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::int64_t> labels;
    std::unordered_map<std::int64_t, Vertex> ids;

    auto intern = [&](std::int64_t label) {
        auto [it, fresh] = ids.emplace(label, static_cast<Vertex>(labels.size()));
        if (fresh) labels.push_back(label);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view rest(line);
        // strip comment
        if (auto hash = rest.find('#'); hash != std::string_view::npos)
            rest = rest.substr(0, hash);

        std::vector<std::string_view> tokens;
        std::size_t pos = 0;
        while (pos < rest.size()) {
            while (pos < rest.size() && std::isspace(static_cast<unsigned char>(rest[pos]))) ++pos;
            std::size_t start = pos;
            while (pos < rest.size() && !std::isspace(static_cast<unsigned char>(rest[pos]))) ++pos;
            if (pos > start) tokens.push_back(rest.substr(start, pos - start));
        }
        if (tokens.empty()) continue;
        if (tokens.size() != 2)
            throw ParseError("expected two vertex labels, got " + std::to_string(tokens.size()) +
                                 " tokens",
                             line_no);
        Vertex u = intern(parse_label(tokens[0], line_no));
        Vertex v = intern(parse_label(tokens[1], line_no));
        edges.emplace_back(u, v);
    }
    const std::size_t n = labels.size();
    return Graph(n, std::move(edges), std::move(labels));
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "# undirected edge list: " << g.vertex_count() << " vertices, " << g.edge_count()
        << " edges\n";
    // canonical order (by label pairs) so serialize/parse round trips are stable
    std::vector<std::pair<std::int64_t, std::int64_t>> lines;
    lines.reserve(g.edge_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.neighbors(u)) {
            if (u >= v) continue;
            std::int64_t a = g.label(u), b = g.label(v);
            lines.emplace_back(std::min(a, b), std::max(a, b));
        }
    std::sort(lines.begin(), lines.end());
    for (const auto& [a, b] : lines) out << a << ' ' << b << '\n';
}

Graph largest_component(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return Graph(0, {});

    std::vector<std::uint32_t> component(n, kUnreachable);
    std::uint32_t num_components = 0;
    std::size_t best_size = 0;
    std::uint32_t best = 0;
    std::vector<Vertex> queue;
    for (Vertex seed = 0; seed < n; ++seed) {
        if (component[seed] != kUnreachable) continue;
        const std::uint32_t c = num_components++;
        std::size_t size = 0;
        queue.clear();
        queue.push_back(seed);
        component[seed] = c;
        while (!queue.empty()) {
            Vertex u = queue.back();
            queue.pop_back();
            ++size;
            for (Vertex v : g.neighbors(u)) {
                if (component[v] == kUnreachable) {
                    component[v] = c;
                    queue.push_back(v);
                }
            }
        }
        // first component reaching the maximum wins, and seeds are scanned in
        // ascending id order, so ties go to the smallest minimum id
        if (size > best_size) {
            best_size = size;
            best = c;
        }
    }

    std::vector<Vertex> dense(n, kNoVertex);
    std::vector<std::int64_t> labels;
    labels.reserve(best_size);
    for (Vertex v = 0; v < n; ++v) {
        if (component[v] == best) {
            dense[v] = static_cast<Vertex>(labels.size());
            labels.push_back(g.label(v));
        }
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
        if (component[u] != best) continue;
        for (Vertex v : g.neighbors(u))
            if (u < v) edges.emplace_back(dense[u], dense[v]);
    }
    return Graph(best_size, std::move(edges), std::move(labels));
}

DistanceField bfs_distances(const Graph& g, Vertex source) {
    const std::size_t n = g.vertex_count();
    if (source >= n) throw ArgumentError("bfs source out of range");
    DistanceField field;
    field.source = source;
    field.hops.assign(n, kUnreachable);
    field.hops[source] = 0;
    std::queue<Vertex> queue;
    queue.push(source);
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop();
        const std::uint32_t d = field.hops[u] + 1;
        for (Vertex v : g.neighbors(u)) {
            if (field.hops[v] == kUnreachable) {
                field.hops[v] = d;
                queue.push(v);
            }
        }
    }
    return field;
}

std::map<std::size_t, std::size_t> degree_distribution(const Graph& g, const VertexSet& set) {
    if (set.universe_size() != g.vertex_count())
        throw ArgumentError("vertex set universe does not match graph");
    std::map<std::size_t, std::size_t> hist;
    set.for_each([&](Vertex v) { ++hist[g.degree(v)]; });
    return hist;
}

} // namespace gcore
