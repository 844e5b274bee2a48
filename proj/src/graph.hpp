#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace corekit {

using VertexId = std::uint32_t;

enum class MergeRule { Sum, Max, Min, First };

enum class DegreeMode { Total, In, Out, InPlusOut };

// One stored line of the simple network, endpoints as dense ids.
// Undirected lines are normalized so that from < to.
struct Line {
  VertexId from;
  VertexId to;
  double weight;

  friend bool operator==(const Line&, const Line&) = default;
};

// Label-based line description used at ingestion time.
struct LineSpec {
  std::string from;
  std::string to;
  double weight = 1.0;
};

// Adjacency entry of vertex x for neighbor `vertex`.
//
// weight_sum / weight_max aggregate every line between x and `vertex`
// (a directed pair can carry up to two arcs). arc_out / arc_in record
// whether x->vertex resp. vertex->x exists; both are true on undirected
// networks.
struct Neighbor {
  VertexId vertex;
  double weight_sum;
  double weight_max;
  bool arc_out;
  bool arc_in;
};

// Immutable simple network. Safe to share read-only across threads.
class Network {
 public:
  Network() = default;

  // Builds from labelled lines. Labels must be unique; every line endpoint
  // must name a known vertex. Loops are dropped, duplicate lines merged
  // per `merge`.
  static Network build(std::vector<std::string> labels,
                       std::span<const LineSpec> lines, bool directed,
                       MergeRule merge = MergeRule::Sum);

  // Same, but endpoints are already dense 0-based ids.
  static Network build_indexed(std::vector<std::string> labels,
                               std::vector<Line> lines, bool directed,
                               MergeRule merge = MergeRule::Sum);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t line_count() const noexcept { return lines_.size(); }
  std::size_t max_degree() const noexcept { return max_degree_; }
  bool directed() const noexcept { return directed_; }
  bool has_negative_weight() const noexcept { return has_negative_weight_; }

  const std::string& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> find_label(std::string_view label) const;

  // Distinct-neighbor view; on undirected networks all modes coincide.
  std::span<const Neighbor> neighbors(VertexId v,
                                      DegreeMode mode = DegreeMode::Total) const;
  std::size_t degree(VertexId v, DegreeMode mode = DegreeMode::Total) const;

  // Merged simple lines, sorted by (from, to).
  const std::vector<Line>& lines() const noexcept { return lines_; }

  void check_vertex(VertexId v) const;

 private:
  struct Csr {
    std::vector<std::size_t> offset;
    std::vector<Neighbor> entries;

    std::span<const Neighbor> row(VertexId v) const {
      return {entries.data() + offset[v], offset[v + 1] - offset[v]};
    }
    std::size_t degree(VertexId v) const { return offset[v + 1] - offset[v]; }
  };

  bool directed_ = false;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> label_index_;
  std::vector<Line> lines_;
  Csr total_;
  Csr in_;   // directed only
  Csr out_;  // directed only
  std::size_t max_degree_ = 0;
  bool has_negative_weight_ = false;
};

// Mutable alive-subset over an immutable network. Single-owner scratch:
// one per running decomposition. Maintains |N(v) ∩ alive| per mode
// incrementally; `recount_degree` recomputes from scratch for checking.
class SubsetView {
 public:
  explicit SubsetView(const Network& net);

  const Network& network() const noexcept { return *net_; }
  bool alive(VertexId v) const { return alive_[v] != 0; }
  std::size_t alive_count() const noexcept { return alive_count_; }

  // Marks v dead and updates the alive degrees of its alive neighbors.
  void remove(VertexId v);

  std::size_t alive_degree(VertexId v, DegreeMode mode = DegreeMode::Total) const;
  std::size_t recount_degree(VertexId v, DegreeMode mode = DegreeMode::Total) const;

 private:
  const Network* net_;
  std::vector<char> alive_;
  std::vector<std::uint32_t> deg_total_;
  std::vector<std::uint32_t> deg_in_;   // directed only
  std::vector<std::uint32_t> deg_out_;  // directed only
  std::size_t alive_count_;
};

}  // namespace corekit
