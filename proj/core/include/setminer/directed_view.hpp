#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "setminer/ordering.hpp"
#include "setminer/set_graph.hpp"
#include "setminer/types.hpp"
#include "setminer/vertex_set.hpp"

namespace setminer {

// Acyclic orientation of a graph induced by a rank: an edge points from v
// to u iff rank(v) < rank(u). Out-neighborhoods are materialized once;
// N+(v) and N-(v) partition N(v) and every undirected edge appears in
// exactly one out-set.
template <VertexSet Set>
class DirectedView {
 public:
  DirectedView(const SetGraph<Set>& base, const Rank& rank)
      : base_(&base), rank_(&rank) {
    if (rank.rank_of.size() != base.num_vertices() || !rank.is_permutation())
      throw std::invalid_argument("rank is not a bijection on [0, n)");
    out_.reserve(base.num_vertices());
    std::vector<VertexId> buf;
    for (VertexId v = 0; v < base.num_vertices(); ++v) {
      buf.clear();
      const std::uint32_t rv = rank.rank_of[v];
      base.neighbors(v).for_each([&](VertexId u) {
        if (rank.rank_of[u] > rv) buf.push_back(u);
      });
      std::sort(buf.begin(), buf.end());
      out_.push_back(Set::from_sorted(buf));
    }
  }

  const SetGraph<Set>& base() const { return *base_; }
  const Rank& rank() const { return *rank_; }

  const Set& out_neighbors(VertexId v) const { return out_[v]; }
  std::size_t out_degree(VertexId v) const { return out_[v].cardinality(); }

 private:
  const SetGraph<Set>* base_;
  const Rank* rank_;
  std::vector<Set> out_;
};

template <VertexSet Set>
DirectedView<Set> orient_by_rank(const SetGraph<Set>& g, const Rank& rank) {
  return DirectedView<Set>(g, rank);
}

}  // namespace setminer
