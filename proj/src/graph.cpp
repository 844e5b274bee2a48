#include "graph.hpp"

#include <algorithm>
#include <cassert>

#include "error.hpp"

namespace corekit {

namespace {

double merge_weight(MergeRule rule, double acc, double next) {
  switch (rule) {
    case MergeRule::Sum: return acc + next;
    case MergeRule::Max: return std::max(acc, next);
    case MergeRule::Min: return std::min(acc, next);
    case MergeRule::First: return acc;
  }
  return acc;
}

}  // namespace

Network Network::build(std::vector<std::string> labels,
                       std::span<const LineSpec> lines, bool directed,
                       MergeRule merge) {
  std::unordered_map<std::string_view, VertexId> index;
  index.reserve(labels.size());
  for (VertexId v = 0; v < labels.size(); ++v) {
    if (!index.emplace(labels[v], v).second) {
      throw Error(ErrorCode::InvalidArgument,
                  "duplicate vertex label '" + labels[v] + "'");
    }
  }
  std::vector<Line> resolved;
  resolved.reserve(lines.size());
  for (const LineSpec& spec : lines) {
    auto from = index.find(spec.from);
    if (from == index.end()) {
      throw Error(ErrorCode::InvalidArgument,
                  "unknown vertex label '" + spec.from + "' in line");
    }
    auto to = index.find(spec.to);
    if (to == index.end()) {
      throw Error(ErrorCode::InvalidArgument,
                  "unknown vertex label '" + spec.to + "' in line");
    }
    resolved.push_back({from->second, to->second, spec.weight});
  }
  return build_indexed(std::move(labels), std::move(resolved), directed, merge);
}

Network Network::build_indexed(std::vector<std::string> labels,
                               std::vector<Line> lines, bool directed,
                               MergeRule merge) {
  Network net;
  net.directed_ = directed;
  net.labels_ = std::move(labels);
  const std::size_t n = net.labels_.size();

  net.label_index_.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    if (!net.label_index_.emplace(net.labels_[v], v).second) {
      throw Error(ErrorCode::InvalidArgument,
                  "duplicate vertex label '" + net.labels_[v] + "'");
    }
  }

  // Drop loops, normalize undirected endpoints, then merge duplicates.
  std::erase_if(lines, [&](const Line& l) {
    if (l.from >= n || l.to >= n) {
      throw Error(ErrorCode::InvalidArgument, "line endpoint out of range");
    }
    return l.from == l.to;
  });
  if (!directed) {
    for (Line& l : lines) {
      if (l.from > l.to) std::swap(l.from, l.to);
    }
  }
  std::stable_sort(lines.begin(), lines.end(),
                   [](const Line& a, const Line& b) {
                     return a.from != b.from ? a.from < b.from : a.to < b.to;
                   });
  net.lines_.reserve(lines.size());
  for (const Line& l : lines) {
    if (!net.lines_.empty() && net.lines_.back().from == l.from &&
        net.lines_.back().to == l.to) {
      net.lines_.back().weight =
          merge_weight(merge, net.lines_.back().weight, l.weight);
    } else {
      net.lines_.push_back(l);
    }
  }

  for (const Line& l : net.lines_) {
    if (l.weight < 0.0) net.has_negative_weight_ = true;
  }

  // Half-entries (owner, neighbor, weight, direction), then per-owner
  // sort and merge into the distinct-neighbor total view.
  struct Half {
    VertexId owner;
    Neighbor entry;
  };
  std::vector<Half> halves;
  halves.reserve(net.lines_.size() * 2);
  for (const Line& l : net.lines_) {
    if (directed) {
      halves.push_back({l.from, {l.to, l.weight, l.weight, true, false}});
      halves.push_back({l.to, {l.from, l.weight, l.weight, false, true}});
    } else {
      halves.push_back({l.from, {l.to, l.weight, l.weight, true, true}});
      halves.push_back({l.to, {l.from, l.weight, l.weight, true, true}});
    }
  }
  std::sort(halves.begin(), halves.end(), [](const Half& a, const Half& b) {
    return a.owner != b.owner ? a.owner < b.owner
                              : a.entry.vertex < b.entry.vertex;
  });

  net.total_.offset.assign(n + 1, 0);
  net.total_.entries.reserve(halves.size());
  std::size_t i = 0;
  for (VertexId v = 0; v < n; ++v) {
    net.total_.offset[v] = net.total_.entries.size();
    while (i < halves.size() && halves[i].owner == v) {
      Neighbor merged = halves[i].entry;
      ++i;
      while (i < halves.size() && halves[i].owner == v &&
             halves[i].entry.vertex == merged.vertex) {
        merged.weight_sum += halves[i].entry.weight_sum;
        merged.weight_max = std::max(merged.weight_max, halves[i].entry.weight_max);
        merged.arc_out = merged.arc_out || halves[i].entry.arc_out;
        merged.arc_in = merged.arc_in || halves[i].entry.arc_in;
        ++i;
      }
      net.total_.entries.push_back(merged);
    }
  }
  net.total_.offset[n] = net.total_.entries.size();

  if (directed) {
    auto build_directional = [&](bool out) {
      Csr csr;
      csr.offset.assign(n + 1, 0);
      for (const Line& l : net.lines_) {
        ++csr.offset[(out ? l.from : l.to) + 1];
      }
      for (std::size_t v = 0; v < n; ++v) csr.offset[v + 1] += csr.offset[v];
      csr.entries.resize(net.lines_.size());
      std::vector<std::size_t> fill(csr.offset.begin(), csr.offset.end() - 1);
      for (const Line& l : net.lines_) {
        VertexId owner = out ? l.from : l.to;
        VertexId other = out ? l.to : l.from;
        csr.entries[fill[owner]++] = {other, l.weight, l.weight, out, !out};
      }
      for (VertexId v = 0; v < n; ++v) {
        auto begin = csr.entries.begin() + static_cast<std::ptrdiff_t>(csr.offset[v]);
        auto end = csr.entries.begin() + static_cast<std::ptrdiff_t>(csr.offset[v + 1]);
        std::sort(begin, end, [](const Neighbor& a, const Neighbor& b) {
          return a.vertex < b.vertex;
        });
      }
      return csr;
    };
    net.out_ = build_directional(true);
    net.in_ = build_directional(false);
  }

  for (VertexId v = 0; v < n; ++v) {
    net.max_degree_ = std::max(net.max_degree_, net.total_.degree(v));
  }
  return net;
}

std::optional<VertexId> Network::find_label(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

void Network::check_vertex(VertexId v) const {
  if (v >= vertex_count()) {
    throw Error(ErrorCode::InvalidArgument, "invalid vertex id");
  }
}

std::span<const Neighbor> Network::neighbors(VertexId v, DegreeMode mode) const {
  check_vertex(v);
  if (!directed_ || mode == DegreeMode::Total || mode == DegreeMode::InPlusOut) {
    return total_.row(v);
  }
  return mode == DegreeMode::In ? in_.row(v) : out_.row(v);
}

std::size_t Network::degree(VertexId v, DegreeMode mode) const {
  check_vertex(v);
  if (!directed_) return total_.degree(v);
  switch (mode) {
    case DegreeMode::Total: return total_.degree(v);
    case DegreeMode::In: return in_.degree(v);
    case DegreeMode::Out: return out_.degree(v);
    case DegreeMode::InPlusOut: return in_.degree(v) + out_.degree(v);
  }
  return 0;
}

SubsetView::SubsetView(const Network& net)
    : net_(&net),
      alive_(net.vertex_count(), 1),
      alive_count_(net.vertex_count()) {
  const std::size_t n = net.vertex_count();
  deg_total_.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    deg_total_[v] = static_cast<std::uint32_t>(net.degree(v, DegreeMode::Total));
  }
  if (net.directed()) {
    deg_in_.resize(n);
    deg_out_.resize(n);
    for (VertexId v = 0; v < n; ++v) {
      deg_in_[v] = static_cast<std::uint32_t>(net.degree(v, DegreeMode::In));
      deg_out_[v] = static_cast<std::uint32_t>(net.degree(v, DegreeMode::Out));
    }
  }
}

void SubsetView::remove(VertexId v) {
  net_->check_vertex(v);
  if (!alive_[v]) return;
  alive_[v] = 0;
  --alive_count_;
  const bool directed = net_->directed();
  for (const Neighbor& nb : net_->neighbors(v)) {
    if (!alive_[nb.vertex]) continue;
    --deg_total_[nb.vertex];
    if (directed) {
      // Losing v costs nb an in-arc if v->nb existed, an out-arc if nb->v.
      if (nb.arc_out) --deg_in_[nb.vertex];
      if (nb.arc_in) --deg_out_[nb.vertex];
    }
  }
}

std::size_t SubsetView::alive_degree(VertexId v, DegreeMode mode) const {
  net_->check_vertex(v);
  if (!net_->directed() || mode == DegreeMode::Total) return deg_total_[v];
  switch (mode) {
    case DegreeMode::In: return deg_in_[v];
    case DegreeMode::Out: return deg_out_[v];
    case DegreeMode::InPlusOut: return deg_in_[v] + deg_out_[v];
    default: return deg_total_[v];
  }
}

std::size_t SubsetView::recount_degree(VertexId v, DegreeMode mode) const {
  net_->check_vertex(v);
  if (net_->directed() && mode == DegreeMode::InPlusOut) {
    return recount_degree(v, DegreeMode::In) + recount_degree(v, DegreeMode::Out);
  }
  std::size_t count = 0;
  for (const Neighbor& nb : net_->neighbors(v, mode)) {
    count += alive_[nb.vertex] ? 1 : 0;
  }
  return count;
}

}  // namespace corekit
