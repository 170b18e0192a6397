#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <vector>

#include "setminer/types.hpp"

namespace setminer {

// Vertex set stored as a strictly ascending array, the layout of a CSR
// neighborhood. Binary operations pick between a linear merge and a
// galloping probe (iterate the smaller side, binary-search the larger)
// depending on the size ratio of the operands.
//
// heap_bytes accounting rule: 4 bytes per stored id, no per-set constant.
class SortedArraySet {
 public:
  using const_iterator = std::vector<VertexId>::const_iterator;

  // Beyond this size ratio the galloping scheme beats the merge.
  static constexpr std::size_t kGallopRatio = 32;

  SortedArraySet() = default;

  static SortedArraySet from_sorted(std::span<const VertexId> sorted) {
    assert(std::is_sorted(sorted.begin(), sorted.end()) &&
           std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    SortedArraySet s;
    s.elems_.assign(sorted.begin(), sorted.end());
    return s;
  }

  static SortedArraySet from_values(std::span<const VertexId> values) {
    SortedArraySet s;
    s.elems_.assign(values.begin(), values.end());
    std::sort(s.elems_.begin(), s.elems_.end());
    s.elems_.erase(std::unique(s.elems_.begin(), s.elems_.end()),
                   s.elems_.end());
    return s;
  }

  static SortedArraySet range(VertexId bound) {
    SortedArraySet s;
    s.elems_.resize(bound);
    std::iota(s.elems_.begin(), s.elems_.end(), VertexId{0});
    return s;
  }

  static SortedArraySet single(VertexId v) {
    SortedArraySet s;
    s.elems_.push_back(v);
    return s;
  }

  static SortedArraySet of(std::initializer_list<VertexId> values) {
    return from_values(std::span<const VertexId>(values.begin(), values.size()));
  }

  SortedArraySet clone() const { return *this; }

  SortedArraySet intersect(const SortedArraySet& other) const {
    SortedArraySet out;
    const auto& a = elems_;
    const auto& b = other.elems_;
    if (a.empty() || b.empty()) return out;
    if (use_gallop(a.size(), b.size())) {
      const auto& small = a.size() <= b.size() ? a : b;
      const auto& large = a.size() <= b.size() ? b : a;
      out.elems_.reserve(small.size());
      for (VertexId v : small) {
        if (std::binary_search(large.begin(), large.end(), v))
          out.elems_.push_back(v);
      }
    } else {
      out.elems_.reserve(std::min(a.size(), b.size()));
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(out.elems_));
    }
    return out;
  }

  std::size_t intersect_count(const SortedArraySet& other) const {
    const auto& a = elems_;
    const auto& b = other.elems_;
    if (a.empty() || b.empty()) return 0;
    std::size_t count = 0;
    if (use_gallop(a.size(), b.size())) {
      const auto& small = a.size() <= b.size() ? a : b;
      const auto& large = a.size() <= b.size() ? b : a;
      for (VertexId v : small)
        count += std::binary_search(large.begin(), large.end(), v);
    } else {
      auto ia = a.begin();
      auto ib = b.begin();
      while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
          ++ia;
        } else if (*ib < *ia) {
          ++ib;
        } else {
          ++count;
          ++ia;
          ++ib;
        }
      }
    }
    return count;
  }

  SortedArraySet union_with(const SortedArraySet& other) const {
    SortedArraySet out;
    out.elems_.reserve(elems_.size() + other.elems_.size());
    std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                   other.elems_.end(), std::back_inserter(out.elems_));
    return out;
  }

  SortedArraySet diff(const SortedArraySet& other) const {
    SortedArraySet out;
    out.elems_.reserve(elems_.size());
    std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(),
                        other.elems_.end(), std::back_inserter(out.elems_));
    return out;
  }

  void intersect_inplace(const SortedArraySet& other) {
    *this = intersect(other);
  }
  void union_inplace(const SortedArraySet& other) { *this = union_with(other); }
  void diff_inplace(const SortedArraySet& other) { *this = diff(other); }

  void add(VertexId v) {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
    if (it == elems_.end() || *it != v) elems_.insert(it, v);
  }

  void remove(VertexId v) {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
    if (it != elems_.end() && *it == v) elems_.erase(it);
  }

  bool contains(VertexId v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
  }

  std::size_t cardinality() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }

  std::vector<VertexId> to_sorted_vector() const { return elems_; }

  std::size_t heap_bytes() const { return elems_.size() * sizeof(VertexId); }

  template <typename F>
  void for_each(F&& f) const {
    for (VertexId v : elems_) f(v);
  }

  const_iterator begin() const { return elems_.begin(); }
  const_iterator end() const { return elems_.end(); }

  friend bool operator==(const SortedArraySet&, const SortedArraySet&) = default;

 private:
  static bool use_gallop(std::size_t a, std::size_t b) {
    return a > b * kGallopRatio || b > a * kGallopRatio;
  }

  std::vector<VertexId> elems_;
};

}  // namespace setminer
