#include "gcore/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace gcore {

std::vector<std::int64_t> read_vertex_labels(std::istream& in) {
    std::vector<std::int64_t> labels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size())
                throw ParseError("expected integer vertex label, got '" + token + "'", line_no);
            labels.push_back(value);
        }
    }
    return labels;
}

void write_vertex_set(std::ostream& out, const Graph& g, const VertexSet& set) {
    std::vector<std::int64_t> labels;
    labels.reserve(set.size());
    set.for_each([&](Vertex v) { labels.push_back(g.label(v)); });
    std::sort(labels.begin(), labels.end());
    for (auto label : labels) out << label << '\n';
}

VertexSet labels_to_set(const Graph& g, const std::vector<std::int64_t>& labels) {
    VertexSet set(g.vertex_count());
    for (auto label : labels) {
        auto v = g.vertex_for_label(label);
        if (!v) throw ArgumentError("unknown vertex label: " + std::to_string(label));
        set.insert(*v);
    }
    return set;
}

void write_histogram_csv(std::ostream& out, const std::map<std::size_t, std::size_t>& hist) {
    out << "degree,count\n";
    for (const auto& [degree, count] : hist) out << degree << ',' << count << '\n';
}

void write_tagged_edge_list(std::ostream& out, const OuterplanarGraph& h) {
    const Graph& g = h.graph;
    out << "# outerplanar spanning subgraph: " << g.vertex_count() << " vertices, "
        << g.edge_count() << " edges (tags: T tree, L left, R right)\n";
    for (auto [child, parent] : h.tree_edges)
        out << g.label(child) << ' ' << g.label(parent) << " T\n";
    for (auto [v, w] : h.left_edges) out << g.label(v) << ' ' << g.label(w) << " L\n";
    for (auto [v, w] : h.right_edges) out << g.label(v) << ' ' << g.label(w) << " R\n";
}

OuterplanarGraph parse_tagged_edge_list(std::istream& in) {
    struct RawEdge {
        std::int64_t a, b;
        char tag;
    };
    std::vector<RawEdge> raw;
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
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::string a, b, tag;
        if (!(tokens >> a)) continue;
        if (!(tokens >> b >> tag) || tag.size() != 1 ||
            (tag[0] != 'T' && tag[0] != 'L' && tag[0] != 'R'))
            throw ParseError("expected '<label> <label> <T|L|R>'", line_no);
        std::string extra;
        if (tokens >> extra) throw ParseError("trailing tokens", line_no);

        auto parse_one = [&](const std::string& token) {
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size())
                throw ParseError("expected integer vertex label, got '" + token + "'", line_no);
            return value;
        };
        raw.push_back({parse_one(a), parse_one(b), tag[0]});
    }

    OuterplanarGraph h;
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(raw.size());
    for (const auto& e : raw) {
        Vertex a = intern(e.a), b = intern(e.b);
        edges.emplace_back(a, b);
        switch (e.tag) {
            case 'T': h.tree_edges.emplace_back(a, b); break;
            case 'L': h.left_edges.emplace_back(a, b); break;
            default: h.right_edges.emplace_back(a, b); break;
        }
    }
    const std::size_t n = labels.size();
    h.graph = Graph(n, std::move(edges), std::move(labels));
    return h;
}

} // namespace gcore
