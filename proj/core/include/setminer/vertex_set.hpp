#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

#include "setminer/types.hpp"

namespace setminer {

// Behavioral contract shared by SortedArraySet, HybridBitmapSet and
// HashVertexSet. Every mining kernel is written against this concept, so any
// model that satisfies it can be swapped in without touching kernel code.
//
// Semantics:
//  * a set holds each VertexId at most once; cardinality() is exact;
//  * non-mutating binary ops never modify their inputs and return a set of
//    the same representation as the left operand;
//  * remove() of an absent element is a no-op;
//  * to_sorted_vector() is the canonical (ascending) view used for
//    cross-representation comparison;
//  * heap_bytes() follows the representation's documented accounting rule.
template <typename S>
concept VertexSet = requires(const S& a, const S& b, S& m, VertexId v,
                             std::span<const VertexId> span) {
  { S{} } -> std::same_as<S>;
  { S::from_sorted(span) } -> std::same_as<S>;
  { S::from_values(span) } -> std::same_as<S>;
  { S::range(v) } -> std::same_as<S>;
  { S::single(v) } -> std::same_as<S>;
  { a.clone() } -> std::same_as<S>;

  { a.intersect(b) } -> std::same_as<S>;
  { a.intersect_count(b) } -> std::convertible_to<std::size_t>;
  { a.union_with(b) } -> std::same_as<S>;
  { a.diff(b) } -> std::same_as<S>;
  m.intersect_inplace(b);
  m.union_inplace(b);
  m.diff_inplace(b);
  m.add(v);
  m.remove(v);

  { a.contains(v) } -> std::convertible_to<bool>;
  { a.cardinality() } -> std::convertible_to<std::size_t>;
  { a.empty() } -> std::convertible_to<bool>;
  { a.to_sorted_vector() } -> std::same_as<std::vector<VertexId>>;
  { a.heap_bytes() } -> std::convertible_to<std::size_t>;
  { a == b } -> std::convertible_to<bool>;
  a.begin();
  a.end();
};

}  // namespace setminer
