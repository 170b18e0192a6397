#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <unordered_set>
#include <vector>

#include "setminer/types.hpp"

namespace setminer {

// Vertex set backed by a hashtable. Membership is exact; iteration order is
// unspecified (callers needing a canonical order use to_sorted_vector).
// Binary operations iterate the smaller operand and probe the larger.
//
// heap_bytes accounting rule: one pointer per bucket plus 16 bytes of node
// payload per stored id (element + chaining overhead); 0 for the empty set.
class HashVertexSet {
 public:
  using const_iterator = std::unordered_set<VertexId>::const_iterator;

  HashVertexSet() = default;

  static HashVertexSet from_sorted(std::span<const VertexId> sorted) {
    HashVertexSet s;
    s.elems_.insert(sorted.begin(), sorted.end());
    return s;
  }

  static HashVertexSet from_values(std::span<const VertexId> values) {
    HashVertexSet s;
    s.elems_.insert(values.begin(), values.end());
    return s;
  }

  static HashVertexSet range(VertexId bound) {
    HashVertexSet s;
    s.elems_.reserve(bound);
    for (VertexId v = 0; v < bound; ++v) s.elems_.insert(v);
    return s;
  }

  static HashVertexSet single(VertexId v) {
    HashVertexSet s;
    s.elems_.insert(v);
    return s;
  }

  static HashVertexSet of(std::initializer_list<VertexId> values) {
    return from_values(std::span<const VertexId>(values.begin(), values.size()));
  }

  HashVertexSet clone() const { return *this; }

  HashVertexSet intersect(const HashVertexSet& other) const {
    const HashVertexSet& small = cardinality() <= other.cardinality() ? *this : other;
    const HashVertexSet& large = cardinality() <= other.cardinality() ? other : *this;
    HashVertexSet out;
    for (VertexId v : small.elems_)
      if (large.contains(v)) out.elems_.insert(v);
    return out;
  }

  std::size_t intersect_count(const HashVertexSet& other) const {
    const HashVertexSet& small = cardinality() <= other.cardinality() ? *this : other;
    const HashVertexSet& large = cardinality() <= other.cardinality() ? other : *this;
    std::size_t count = 0;
    for (VertexId v : small.elems_) count += large.contains(v);
    return count;
  }

  HashVertexSet union_with(const HashVertexSet& other) const {
    HashVertexSet out = *this;
    out.elems_.insert(other.elems_.begin(), other.elems_.end());
    return out;
  }

  HashVertexSet diff(const HashVertexSet& other) const {
    HashVertexSet out;
    for (VertexId v : elems_)
      if (!other.contains(v)) out.elems_.insert(v);
    return out;
  }

  void intersect_inplace(const HashVertexSet& other) {
    for (auto it = elems_.begin(); it != elems_.end();) {
      if (!other.contains(*it))
        it = elems_.erase(it);
      else
        ++it;
    }
  }

  void union_inplace(const HashVertexSet& other) {
    elems_.insert(other.elems_.begin(), other.elems_.end());
  }

  void diff_inplace(const HashVertexSet& other) {
    for (VertexId v : other.elems_) elems_.erase(v);
  }

  void add(VertexId v) { elems_.insert(v); }
  void remove(VertexId v) { elems_.erase(v); }

  bool contains(VertexId v) const { return elems_.count(v) != 0; }
  std::size_t cardinality() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }

  std::vector<VertexId> to_sorted_vector() const {
    std::vector<VertexId> out(elems_.begin(), elems_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t heap_bytes() const {
    if (elems_.empty()) return 0;
    return elems_.bucket_count() * sizeof(void*) + elems_.size() * 16;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (VertexId v : elems_) f(v);
  }

  const_iterator begin() const { return elems_.begin(); }
  const_iterator end() const { return elems_.end(); }

  friend bool operator==(const HashVertexSet& a, const HashVertexSet& b) {
    return a.elems_ == b.elems_;
  }

 private:
  std::unordered_set<VertexId> elems_;
};

}  // namespace setminer
