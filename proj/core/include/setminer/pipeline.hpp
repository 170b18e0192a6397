#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setminer/bench_report.hpp"
#include "setminer/k_clique.hpp"
#include "setminer/maximal_cliques.hpp"
#include "setminer/similarity.hpp"

namespace setminer {

enum class SetImpl { Sorted, Hybrid, Hash };
enum class OrderingKind { None, Degree, Degeneracy, ApproxDegeneracy };
enum class KernelKind {
  MaximalCliques,
  KClique,
  KCliqueStar,
  Triangles,
  KCore,
  LinkPred,
  JarvisPatrick,
};

const char* to_string(SetImpl impl);
const char* to_string(KernelKind kernel);
std::optional<SetImpl> parse_set_impl(const std::string& name);
std::optional<KernelKind> parse_kernel(const std::string& name);

struct GeneratorSpec {
  enum class Kind { ErdosRenyi, Kronecker } kind = Kind::ErdosRenyi;
  VertexId n = 0;       // Erdos-Renyi
  double p = 0.0;       // Erdos-Renyi
  std::uint32_t scale = 0;        // Kronecker
  std::uint32_t edge_factor = 0;  // Kronecker

  std::string label(std::uint64_t seed) const;
};

// Full description of one staged run: input, representation, ordering,
// kernel with parameters, thread cap, repetitions and seed.
struct PipelineConfig {
  std::string input_path;  // ignored when generator is set
  std::optional<GeneratorSpec> generator;
  bool one_based = false;

  SetImpl set_impl = SetImpl::Hybrid;
  OrderingKind ordering = OrderingKind::Degeneracy;
  double epsilon = 0.1;  // ApproxDegeneracy parameter

  KernelKind kernel = KernelKind::MaximalCliques;
  unsigned k = 0;                 // kclique / kcliquestar / kcore
  std::uint32_t tau = 0;          // jp
  double removal_fraction = 0.1;  // linkpred
  SimilarityMeasure measure = SimilarityMeasure::CommonNeighbors;  // linkpred
  KCliqueMode mode = KCliqueMode::VertexParallel;
  bool pivoting = true;
  bool subgraph_h = false;

  int threads = 0;  // hard cap for kernel parallelism; 0 = all cores
  std::uint32_t repetitions = 1;
  std::uint64_t seed = 0;

  // Optional pattern export; written by one extra untimed kernel run.
  std::string pattern_out;

  std::string input_label() const;
  std::string ordering_label() const;

  // Checks kernel-parameter completeness before any computation starts.
  // Throws std::invalid_argument.
  void validate() const;
};

// Raised when a stage fails; carries the timings of the stages that did
// complete.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(const std::string& what, BenchReport partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}

  const BenchReport& partial_report() const { return partial_; }

 private:
  BenchReport partial_;
};

// Executes load -> build -> preprocess -> kernel with per-stage timing.
// The kernel runs `repetitions` times; with 2 or more repetitions the first
// is discarded from aggregates as warm-up. Pattern counts must be identical
// across repetitions.
BenchReport run_pipeline(const PipelineConfig& cfg);

// One report per thread count, same input and seed. Pattern counts are
// verified identical across entries.
std::vector<BenchReport> scaling_sweep(PipelineConfig cfg,
                                       const std::vector<int>& thread_counts);

}  // namespace setminer
