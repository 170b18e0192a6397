#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "setminer/edge_list.hpp"
#include "setminer/types.hpp"
#include "setminer/vertex_set.hpp"

namespace setminer {

// Undirected simple graph stored as one vertex set per neighborhood.
// Immutable after construction; safe for concurrent reads.
//
// Invariants: u in N(v) iff v in N(u); v never in N(v);
// num_edges() == sum of degrees / 2.
template <VertexSet Set>
class SetGraph {
 public:
  SetGraph() = default;

  // Symmetrizes, deduplicates and drops self-loops. Vertices of the edge
  // list's universe that lose all incident edges stay as isolated vertices.
  static SetGraph from_edges(const EdgeList& edges) {
    SetGraph g;
    g.n_ = edges.n;

    std::vector<Edge> canon;
    canon.reserve(edges.pairs.size());
    for (const auto& [u, v] : edges.pairs) {
      if (u == v) continue;
      canon.push_back(make_edge(u, v));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    g.m_ = canon.size();

    std::vector<std::uint32_t> degree(g.n_, 0);
    for (const auto& [u, v] : canon) {
      ++degree[u];
      ++degree[v];
    }
    std::vector<std::size_t> offset(g.n_ + 1, 0);
    for (VertexId v = 0; v < g.n_; ++v) offset[v + 1] = offset[v] + degree[v];
    std::vector<VertexId> nbrs(offset[g.n_]);
    std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
    for (const auto& [u, v] : canon) {
      nbrs[cursor[u]++] = v;
      nbrs[cursor[v]++] = u;
    }

    g.adj_.reserve(g.n_);
    for (VertexId v = 0; v < g.n_; ++v) {
      auto first = nbrs.begin() + offset[v];
      auto last = nbrs.begin() + offset[v + 1];
      std::sort(first, last);
      g.adj_.push_back(Set::from_sorted(std::span<const VertexId>(&*first, last - first)));
    }
    return g;
  }

  VertexId num_vertices() const { return n_; }
  std::uint64_t num_edges() const { return m_; }

  const Set& neighbors(VertexId v) const { return adj_[v]; }
  std::size_t degree(VertexId v) const { return adj_[v].cardinality(); }

  std::size_t max_degree() const {
    std::size_t max = 0;
    for (VertexId v = 0; v < n_; ++v) max = std::max(max, degree(v));
    return max;
  }

  // Canonical (u < v) edge enumeration, ascending.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (VertexId u = 0; u < n_; ++u)
      for (VertexId v : adj_[u].to_sorted_vector())
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  // Heap bytes of the adjacency storage under the set representation's
  // accounting rule.
  std::uint64_t representation_size() const {
    std::uint64_t bytes = 0;
    for (const Set& s : adj_) bytes += s.heap_bytes();
    return bytes;
  }

 private:
  VertexId n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<Set> adj_;
};

template <VertexSet Set>
SetGraph<Set> build_graph(const EdgeList& edges) {
  return SetGraph<Set>::from_edges(edges);
}

}  // namespace setminer
