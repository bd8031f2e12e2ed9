#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gcore/graph.hpp"
#include "gcore/sampler.hpp"
#include "gcore/vertex_set.hpp"

namespace gcore {

/// One integer label per line; '#' comments and blank lines are skipped.
std::vector<std::int64_t> read_vertex_labels(std::istream& in);

/// Members as original labels, ascending, one per line.
void write_vertex_set(std::ostream& out, const Graph& g, const VertexSet& set);

/// Maps labels to dense ids; throws ArgumentError naming the first unknown label.
VertexSet labels_to_set(const Graph& g, const std::vector<std::int64_t>& labels);

void write_histogram_csv(std::ostream& out, const std::map<std::size_t, std::size_t>& hist);

/// Edge list with a per-edge tag: T (tree), L, R. Back edges keep their
/// (deeper endpoint, ancestor) orientation so the embedding reloads exactly.
void write_tagged_edge_list(std::ostream& out, const OuterplanarGraph& h);
OuterplanarGraph parse_tagged_edge_list(std::istream& in);

/// Ordered key=value lines (run manifests / stats sidecars).
class StatsWriter {
  public:
    template <typename T>
    void add(const std::string& key, const T& value) {
        if constexpr (std::is_floating_point_v<T>) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.6g", static_cast<double>(value));
            entries_.emplace_back(key, buf);
        } else if constexpr (std::is_arithmetic_v<T>) {
            entries_.emplace_back(key, std::to_string(value));
        } else {
            entries_.emplace_back(key, std::string(value));
        }
    }

    void write(std::ostream& out) const {
        for (const auto& [k, v] : entries_) out << k << '=' << v << '\n';
    }

  private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

} // namespace gcore
