#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace corekit {

// Vertex property functions over the alive neighborhood N(v, U).
enum class Property {
  Degree,           // p1: |N(v,U)|
  InDegree,         // p2
  OutDegree,        // p3
  InPlusOutDegree,  // p4
  WeightSum,        // p5: sum of incident line weights into U
  WeightMax,        // p6: max incident line weight into U
  Triangles,        // p7 with cycle length 3: triangles through v inside U
  AverageWeight,    // non-monotone: weight sum / neighbor count, 0 on empty
};

struct PropertyTraits {
  bool monotone;
  bool local;
  double empty_value;  // value on an empty alive neighborhood
  bool needs_directed;
  bool needs_non_negative_weights;
  bool integral;
};

const PropertyTraits& traits(Property p);

// CLI token: p1..p7 or avg.
std::string_view property_token(Property p);
std::optional<Property> parse_property(std::string_view token);

// Evaluator bound to one network. Holds scratch for the triangle count,
// so use one instance per decomposition run; instances do not alias.
class Evaluator {
 public:
  Evaluator(Property p, const Network& net);

  Property property() const noexcept { return property_; }

  // Value of the property at an alive vertex over the alive set.
  double evaluate(VertexId v, const SubsetView& alive);

  // O(1) value after the link's other endpoint was removed, where the
  // property supports it (p1-p5); nullopt means re-evaluate.
  std::optional<double> after_removal(double current, const Neighbor& removed_link) const;

 private:
  Property property_;
  const Network* net_;
  std::vector<std::uint32_t> stamp_;  // triangle scratch
  std::uint32_t epoch_ = 0;
};

struct MonotonicityCounterexample {
  VertexId vertex;
  double inner_value;  // value on the smaller set of the sampled chain
  double outer_value;  // value on the larger set
};

// Samples random chains U1 ⊂ U2 ⊆ V and reports every sampled violation
// of inner ≤ outer. Empty for the monotone properties.
std::vector<MonotonicityCounterexample> check_monotonicity(const Network& net,
                                                           Property p,
                                                           std::size_t trials,
                                                           std::uint64_t seed);

}  // namespace corekit
