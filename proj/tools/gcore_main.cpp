#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gcore/bb_tree.hpp"
#include "gcore/closure.hpp"
#include "gcore/core_periphery.hpp"
#include "gcore/ensemble.hpp"
#include "gcore/io.hpp"
#include "gcore/op_closure.hpp"
#include "gcore/sampler.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool looks_tagged(const std::string& path) {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::string a, b, c, d;
        if (!(tokens >> a)) continue;
        return (tokens >> b >> c) && !(tokens >> d) &&
               (c == "T" || c == "L" || c == "R");
    }
    return false;
}

gcore::Graph load_graph(const std::string& path, gcore::StatsWriter& stats) {
    std::ifstream in(path);
    if (!in) throw gcore::Error("cannot open input file: " + path);
    const auto t0 = Clock::now();
    gcore::Graph raw = looks_tagged(path) ? gcore::parse_tagged_edge_list(in).graph
                                          : gcore::parse_edge_list(in);
    gcore::Graph g = gcore::largest_component(raw);
    stats.add("input", path);
    stats.add("input_vertices", raw.vertex_count());
    stats.add("input_edges", raw.edge_count());
    stats.add("component_vertices", g.vertex_count());
    stats.add("component_edges", g.edge_count());
    stats.add("load_ms", ms_since(t0));
    return g;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw gcore::Error("cannot open output file: " + path);
    return out;
}

void write_stats(const gcore::StatsWriter& stats, const std::string& path) {
    auto out = open_out(path);
    stats.write(out);
}

std::vector<std::int64_t> load_labels(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gcore::Error("cannot open vertex file: " + path);
    return gcore::read_vertex_labels(in);
}

struct CommonStats {
    gcore::StatsWriter writer;

    void begin(const std::string& command, std::uint64_t seed) {
        writer.add("tool", "gcore");
        writer.add("version", kVersion);
        writer.add("command", command);
        writer.add("seed", seed);
    }
};

int run_sample(const std::string& input, std::uint64_t seed, const std::string& out_path,
               std::string stats_path) {
    CommonStats stats;
    stats.begin("sample", seed);
    gcore::Graph g = load_graph(input, stats.writer);

    const auto t0 = Clock::now();
    gcore::SampleTrace trace;
    gcore::OuterplanarGraph h = gcore::sample_outerplanar(g, seed, &trace);
    const double sample_ms = ms_since(t0);
    gcore::BBTree tree = gcore::build_bb_tree(h);

    auto out = open_out(out_path);
    gcore::write_tagged_edge_list(out, h);

    stats.writer.add("out", out_path);
    stats.writer.add("output_edges", h.graph.edge_count());
    stats.writer.add("tree_edges", h.tree_edges.size());
    stats.writer.add("left_edges", h.left_edges.size());
    stats.writer.add("right_edges", h.right_edges.size());
    stats.writer.add("face_number", gcore::face_number(tree));
    stats.writer.add("stack_ops", trace.stack_pushes + trace.stack_pops);
    stats.writer.add("sample_ms", sample_ms);
    write_stats(stats.writer, stats_path.empty() ? out_path + ".stats" : stats_path);
    return 0;
}

int run_closure(const std::string& input, const std::string& vertices_path,
                const std::string& mode, const gcore::EnsembleConfig& ensemble_config,
                std::uint64_t seed, const std::string& out_path, std::string stats_path,
                const std::string& votes_csv, const std::string& dump_path) {
    CommonStats stats;
    stats.begin("closure", seed);
    gcore::Graph g = load_graph(input, stats.writer);
    gcore::VertexSet x = gcore::labels_to_set(g, load_labels(vertices_path));
    stats.writer.add("vertices", vertices_path);
    stats.writer.add("mode", mode);
    stats.writer.add("set_size", x.size());

    const auto t0 = Clock::now();
    gcore::VertexSet result(g.vertex_count());
    if (mode == "exact") {
        result = gcore::closure_exact(g, x);
    } else if (mode == "naive-op" || mode == "fast-op") {
        gcore::BBTree tree = gcore::build_bb_tree(g); // also validates outerplanarity
        if (!dump_path.empty()) {
            auto dump = open_out(dump_path);
            gcore::dump_blocks(g, tree, dump);
        }
        result = mode == "fast-op" ? gcore::outerplanar_closure(g, tree, x)
                                   : gcore::closure_naive_outerplanar(g, x);
        stats.writer.add("face_number", gcore::face_number(tree));
    } else if (mode == "approx") {
        gcore::EnsembleConfig cfg = ensemble_config;
        cfg.master_seed = seed;
        gcore::Ensemble ensemble(g, cfg);
        if (!votes_csv.empty()) {
            auto votes = ensemble.vote_counts(x);
            auto out = open_out(votes_csv);
            out << "label,votes\n";
            for (std::size_t v = 0; v < votes.size(); ++v)
                out << g.label(static_cast<gcore::Vertex>(v)) << ',' << votes[v] << '\n';
        }
        result = ensemble.closure(x);
        stats.writer.add("subgraphs", cfg.num_subgraphs);
        stats.writer.add("threshold_percent", cfg.threshold_percent);
        stats.writer.add("votes_required", ensemble.votes_required());
    } else {
        throw gcore::Error("unknown closure mode: " + mode);
    }
    stats.writer.add("closure_ms", ms_since(t0));
    stats.writer.add("closure_size", result.size());

    auto out = open_out(out_path);
    gcore::write_vertex_set(out, g, result);
    write_stats(stats.writer, stats_path.empty() ? out_path + ".stats" : stats_path);
    return 0;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoull(item));
    if (out.empty()) throw gcore::Error("empty list: " + text);
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    if (out.empty()) throw gcore::Error("empty list: " + text);
    return out;
}

int run_core(const std::string& input, const std::string& mode, const gcore::CoreConfig& config,
             const std::string& out_prefix, bool grid, const std::string& grid_l,
             const std::string& grid_t, const std::string& exact_core_path) {
    CommonStats stats;
    stats.begin("core", config.master_seed);
    gcore::Graph g = load_graph(input, stats.writer);
    stats.writer.add("mode", mode);
    stats.writer.add("k", config.k);
    stats.writer.add("l", config.l);
    stats.writer.add("subgraphs", config.ensemble.num_subgraphs);
    stats.writer.add("threshold_percent", config.ensemble.threshold_percent);

    if (grid) {
        if (mode != "approx") throw gcore::Error("--grid requires --mode approx");
        if (exact_core_path.empty()) throw gcore::Error("--grid requires --exact-core");
        gcore::VertexSet reference = gcore::labels_to_set(g, load_labels(exact_core_path));
        const auto t0 = Clock::now();
        auto points = gcore::approximate_core_grid(g, config, parse_size_list(grid_l),
                                                   parse_double_list(grid_t), reference);
        stats.writer.add("grid_ms", ms_since(t0));

        auto out = open_out(out_prefix + ".grid.csv");
        out << "l,t,jaccard\n";
        const gcore::GridPoint* best = nullptr;
        for (const auto& p : points) {
            char buf[80];
            std::snprintf(buf, sizeof(buf), "%zu,%g,%.6f", p.l, p.threshold_percent, p.jaccard);
            out << buf << '\n';
            if (!best || p.jaccard > best->jaccard) best = &p;
        }
        stats.writer.add("best_l", best->l);
        stats.writer.add("best_t", best->threshold_percent);
        stats.writer.add("best_jaccard", best->jaccard);
        write_stats(stats.writer, out_prefix + ".stats");
        return 0;
    }

    const auto t0 = Clock::now();
    gcore::CoreResult result;
    if (mode == "exact") {
        result = gcore::exact_core(g, config);
    } else if (mode == "approx") {
        result = gcore::approximate_core(g, config);
    } else {
        throw gcore::Error("unknown core mode: " + mode);
    }
    stats.writer.add("core_ms", ms_since(t0));
    stats.writer.add("core_size", result.core.size());
    stats.writer.add("iterations", result.iterations);
    {
        std::string sizes;
        for (std::size_t s : result.closure_sizes) {
            if (!sizes.empty()) sizes += ',';
            sizes += std::to_string(s);
        }
        stats.writer.add("closure_sizes", sizes);
    }

    gcore::VertexSet periphery = gcore::VertexSet::full(g.vertex_count());
    result.core.for_each([&](gcore::Vertex v) { periphery.erase(v); });

    {
        auto out = open_out(out_prefix + ".core");
        gcore::write_vertex_set(out, g, result.core);
    }
    {
        auto out = open_out(out_prefix + ".periphery");
        gcore::write_vertex_set(out, g, periphery);
    }
    {
        auto out = open_out(out_prefix + ".core_degrees.csv");
        gcore::write_histogram_csv(out, gcore::degree_distribution(g, result.core));
    }
    {
        auto out = open_out(out_prefix + ".periphery_degrees.csv");
        gcore::write_histogram_csv(out, gcore::degree_distribution(g, periphery));
    }
    write_stats(stats.writer, out_prefix + ".stats");
    return 0;
}

int run_eval(const std::string& path_a, const std::string& path_b, const std::string& out_path) {
    auto a = load_labels(path_a);
    auto b = load_labels(path_b);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());

    std::vector<std::int64_t> inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    const std::size_t uni = a.size() + b.size() - inter.size();
    const double j = uni == 0 ? 1.0 : static_cast<double>(inter.size()) / static_cast<double>(uni);

    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", j);
    std::ostringstream report;
    report << "a_size=" << a.size() << '\n'
           << "b_size=" << b.size() << '\n'
           << "intersection=" << inter.size() << '\n'
           << "union=" << uni << '\n'
           << "jaccard=" << buf << '\n';
    std::cout << report.str();
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        out << report.str();
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"geodesic hulls and core-periphery decomposition via outerplanar sampling"};
    app.set_version_flag("--version", std::string("gcore ") + kVersion);
    app.require_subcommand(1);

    std::string input, out, stats_path, vertices, mode, votes_csv, dump_blocks_path;
    std::string eval_a, eval_b, grid_l = "5,10,50,100", grid_t = "1,2,5,10", exact_core_path;
    std::uint64_t seed = 0;
    gcore::CoreConfig core_config;
    bool grid = false;

    auto* sample = app.add_subcommand("sample", "draw a random outerplanar spanning subgraph");
    sample->add_option("--input", input, "edge list file")->required();
    sample->add_option("--seed", seed, "random seed");
    sample->add_option("--out", out, "tagged edge list output")->required();
    sample->add_option("--stats", stats_path, "stats sidecar path (default <out>.stats)");

    auto* closure = app.add_subcommand("closure", "compute a geodesic closure");
    closure->add_option("--input", input, "edge list file")->required();
    closure->add_option("--vertices", vertices, "file with one vertex label per line")->required();
    closure->add_option("--mode", mode, "exact | naive-op | fast-op | approx")->required();
    closure->add_option("--seed", seed, "random seed (approx mode)");
    closure->add_option("--subgraphs", core_config.ensemble.num_subgraphs, "ensemble size N");
    closure->add_option("--threshold", core_config.ensemble.threshold_percent,
                        "vote threshold t in percent");
    closure->add_option("--jobs", core_config.ensemble.jobs, "worker threads");
    closure->add_option("--out", out, "closure member list output")->required();
    closure->add_option("--stats", stats_path, "stats sidecar path (default <out>.stats)");
    closure->add_option("--votes-csv", votes_csv, "write per-vertex vote counts (approx mode)");
    closure->add_option("--dump-blocks", dump_blocks_path,
                        "write block cycles and chords (outerplanar modes)");

    auto* core = app.add_subcommand("core", "core-periphery decomposition");
    core->add_option("--input", input, "edge list file")->required();
    core->add_option("--mode", mode, "exact | approx")->required();
    core->add_option("--k", core_config.k, "seed-set size for exact closures");
    core->add_option("--l", core_config.l, "seed-set size for approximate closures");
    core->add_option("--threshold", core_config.ensemble.threshold_percent,
                     "vote threshold t in percent");
    core->add_option("--subgraphs", core_config.ensemble.num_subgraphs, "ensemble size N");
    core->add_option("--seed", core_config.master_seed, "master seed");
    core->add_option("--max-iterations", core_config.max_iterations, "fixpoint safeguard");
    core->add_option("--approx-draws", core_config.approx_draws,
                     "approximate closures intersected (the fixpoint test may stop earlier)");
    core->add_option("--jobs", core_config.ensemble.jobs, "worker threads");
    core->add_option("--out", out, "output path prefix")->required();
    core->add_flag("--grid", grid, "sweep l and t, score against --exact-core");
    core->add_option("--grid-l", grid_l, "comma-separated l values");
    core->add_option("--grid-t", grid_t, "comma-separated t values (percent)");
    core->add_option("--exact-core", exact_core_path, "reference core for --grid");

    auto* eval = app.add_subcommand("eval", "Jaccard similarity of two vertex set files");
    eval->add_option("--a", eval_a, "first vertex set file")->required();
    eval->add_option("--b", eval_b, "second vertex set file")->required();
    eval->add_option("--out", out, "also write the report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sample->parsed()) return run_sample(input, seed, out, stats_path);
        if (closure->parsed())
            return run_closure(input, vertices, mode, core_config.ensemble, seed, out, stats_path,
                               votes_csv, dump_blocks_path);
        if (core->parsed())
            return run_core(input, mode, core_config, out, grid, grid_l, grid_t, exact_core_path);
        if (eval->parsed()) return run_eval(eval_a, eval_b, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
