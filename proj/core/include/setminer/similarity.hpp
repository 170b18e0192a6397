#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "setminer/set_graph.hpp"
#include "setminer/types.hpp"
#include "setminer/vertex_set.hpp"

namespace setminer {

enum class SimilarityMeasure {
  Jaccard,
  Overlap,
  AdamicAdar,
  ResourceAllocation,
  CommonNeighbors,
  TotalNeighbors,
  PreferentialAttachment,
};

const char* to_string(SimilarityMeasure measure);
std::optional<SimilarityMeasure> parse_measure(const std::string& name);

// True for measures whose score is zero whenever u and v share no
// neighbors; the link-prediction candidate pool exploits this.
constexpr bool depends_on_common_neighbors(SimilarityMeasure m) {
  return m != SimilarityMeasure::TotalNeighbors &&
         m != SimilarityMeasure::PreferentialAttachment;
}

// Vertex similarity of u and v from their (undirected) neighborhoods.
// Conventions: Jaccard and Overlap are 0 when both neighborhoods are empty
// (Overlap also when only one is); Adamic-Adar skips common neighbors of
// degree <= 1, whose log would not be positive. Sums over common neighbors
// run in ascending id order, so values are bit-identical across set
// representations.
template <VertexSet Set>
double similarity(const SetGraph<Set>& g, VertexId u, VertexId v,
                  SimilarityMeasure measure) {
  const Set& nu = g.neighbors(u);
  const Set& nv = g.neighbors(v);
  switch (measure) {
    case SimilarityMeasure::CommonNeighbors:
      return static_cast<double>(nu.intersect_count(nv));
    case SimilarityMeasure::TotalNeighbors:
      return static_cast<double>(nu.cardinality() + nv.cardinality() -
                                 nu.intersect_count(nv));
    case SimilarityMeasure::PreferentialAttachment:
      return static_cast<double>(nu.cardinality()) *
             static_cast<double>(nv.cardinality());
    case SimilarityMeasure::Jaccard: {
      const std::size_t common = nu.intersect_count(nv);
      const std::size_t total = nu.cardinality() + nv.cardinality() - common;
      return total == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(total);
    }
    case SimilarityMeasure::Overlap: {
      const std::size_t smaller = std::min(nu.cardinality(), nv.cardinality());
      if (smaller == 0) return 0.0;
      return static_cast<double>(nu.intersect_count(nv)) /
             static_cast<double>(smaller);
    }
    case SimilarityMeasure::AdamicAdar: {
      double sum = 0.0;
      for (VertexId w : nu.intersect(nv).to_sorted_vector()) {
        const std::size_t dw = g.degree(w);
        if (dw > 1) sum += 1.0 / std::log(static_cast<double>(dw));
      }
      return sum;
    }
    case SimilarityMeasure::ResourceAllocation: {
      double sum = 0.0;
      for (VertexId w : nu.intersect(nv).to_sorted_vector())
        sum += 1.0 / static_cast<double>(g.degree(w));
      return sum;
    }
  }
  return 0.0;
}

}  // namespace setminer
