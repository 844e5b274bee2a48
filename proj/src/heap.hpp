#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "graph.hpp"

namespace corekit {

// Indexed binary min-heap over vertex ids with change-key in O(log n).
// Equal keys are ordered by a caller-supplied rank, so the extract order
// is fully determined by (key, rank).
class MinPriorityIndex {
 public:
  MinPriorityIndex(std::span<const double> keys,
                   std::span<const std::uint32_t> ranks)
      : key_(keys.begin(), keys.end()),
        rank_(ranks.begin(), ranks.end()),
        heap_(keys.size()),
        pos_(keys.size()) {
    for (std::size_t i = 0; i < heap_.size(); ++i) {
      heap_[i] = static_cast<VertexId>(i);
      pos_[i] = i;
    }
    if (!heap_.empty()) {
      for (std::size_t i = heap_.size() / 2; i-- > 0;) sift_down(i);
    }
  }

  bool empty() const noexcept { return heap_.empty(); }
  std::size_t size() const noexcept { return heap_.size(); }

  VertexId top() const { return heap_.front(); }
  double top_key() const { return key_[heap_.front()]; }

  bool contains(VertexId v) const { return pos_[v] != kGone; }
  double key(VertexId v) const { return key_[v]; }

  VertexId pop() {
    VertexId v = heap_.front();
    swap_slots(0, heap_.size() - 1);
    heap_.pop_back();
    pos_[v] = kGone;
    if (!heap_.empty()) sift_down(0);
    return v;
  }

  // Works in either direction; the new key may be larger or smaller.
  void change_key(VertexId v, double key) {
    key_[v] = key;
    std::size_t i = pos_[v];
    if (!sift_up(i)) sift_down(i);
  }

 private:
  static constexpr std::size_t kGone = std::numeric_limits<std::size_t>::max();

  bool less(VertexId a, VertexId b) const {
    if (key_[a] != key_[b]) return key_[a] < key_[b];
    return rank_[a] < rank_[b];
  }

  void swap_slots(std::size_t i, std::size_t j) {
    std::swap(heap_[i], heap_[j]);
    pos_[heap_[i]] = i;
    pos_[heap_[j]] = j;
  }

  bool sift_up(std::size_t i) {
    bool moved = false;
    while (i > 0) {
      std::size_t parent = (i - 1) / 2;
      if (!less(heap_[i], heap_[parent])) break;
      swap_slots(i, parent);
      i = parent;
      moved = true;
    }
    return moved;
  }

  void sift_down(std::size_t i) {
    for (;;) {
      std::size_t left = 2 * i + 1;
      if (left >= heap_.size()) return;
      std::size_t best = left;
      std::size_t right = left + 1;
      if (right < heap_.size() && less(heap_[right], heap_[left])) best = right;
      if (!less(heap_[best], heap_[i])) return;
      swap_slots(i, best);
      i = best;
    }
  }

  std::vector<double> key_;
  std::vector<std::uint32_t> rank_;
  std::vector<VertexId> heap_;
  std::vector<std::size_t> pos_;
};

}  // namespace corekit
