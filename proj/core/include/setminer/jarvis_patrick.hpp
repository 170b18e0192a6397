#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include <omp.h>

#include "setminer/set_graph.hpp"
#include "setminer/types.hpp"
#include "setminer/vertex_set.hpp"

namespace setminer {

// Partition of the vertices into clusters. Labels are dense in
// [0, cluster_count), numbered by each cluster's smallest member.
struct Clustering {
  std::vector<std::uint32_t> label;
  std::uint32_t cluster_count = 0;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

// Jarvis-Patrick clustering with the common-neighbor criterion: an edge
// (u, v) is kept iff |N(u) n N(v)| >= tau, and clusters are the connected
// components of the kept-edge graph. Vertices with no kept edge form
// singleton clusters. tau = 0 keeps every edge, so clusters equal the
// connected components of G.
template <VertexSet Set>
Clustering jarvis_patrick(const SetGraph<Set>& g, std::uint32_t tau,
                          int threads = 0) {
  const VertexId n = g.num_vertices();
  const std::vector<Edge> edges = g.edges();
  std::vector<char> keep(edges.size(), 0);
  const int nt = threads > 0 ? threads : omp_get_max_threads();
  const std::int64_t m = static_cast<std::int64_t>(edges.size());
#pragma omp parallel for schedule(dynamic, 256) num_threads(nt)
  for (std::int64_t i = 0; i < m; ++i) {
    const auto [u, v] = edges[i];
    keep[i] = g.neighbors(u).intersect_count(g.neighbors(v)) >= tau;
  }

  detail::UnionFind uf(n);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (keep[i]) uf.unite(edges[i].first, edges[i].second);

  Clustering out;
  out.label.assign(n, 0);
  std::vector<std::uint32_t> root_label(n, UINT32_MAX);
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t root = uf.find(v);
    if (root_label[root] == UINT32_MAX) root_label[root] = out.cluster_count++;
    out.label[v] = root_label[root];
  }
  return out;
}

}  // namespace setminer
