#include "setminer/similarity.hpp"

namespace setminer {

const char* to_string(SimilarityMeasure measure) {
  switch (measure) {
    case SimilarityMeasure::Jaccard: return "jaccard";
    case SimilarityMeasure::Overlap: return "overlap";
    case SimilarityMeasure::AdamicAdar: return "adamic-adar";
    case SimilarityMeasure::ResourceAllocation: return "resource-allocation";
    case SimilarityMeasure::CommonNeighbors: return "common-neighbors";
    case SimilarityMeasure::TotalNeighbors: return "total-neighbors";
    case SimilarityMeasure::PreferentialAttachment: return "preferential-attachment";
  }
  return "?";
}

std::optional<SimilarityMeasure> parse_measure(const std::string& name) {
  for (SimilarityMeasure m :
       {SimilarityMeasure::Jaccard, SimilarityMeasure::Overlap,
        SimilarityMeasure::AdamicAdar, SimilarityMeasure::ResourceAllocation,
        SimilarityMeasure::CommonNeighbors, SimilarityMeasure::TotalNeighbors,
        SimilarityMeasure::PreferentialAttachment}) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

}  // namespace setminer
