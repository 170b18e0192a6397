#include "setminer/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "setminer/edge_list.hpp"
#include "setminer/generators.hpp"
#include "setminer/hash_vertex_set.hpp"
#include "setminer/hybrid_bitmap_set.hpp"
#include "setminer/jarvis_patrick.hpp"
#include "setminer/link_prediction.hpp"
#include "setminer/sorted_array_set.hpp"

namespace setminer {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  const auto elapsed = Clock::now() - start;
  const double s = std::chrono::duration<double>(elapsed).count();
  // Clamp to the clock tick so per-repetition throughput stays defined.
  return s > 1e-9 ? s : 1e-9;
}

std::string format_short_double(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

template <VertexSet Set>
Rank make_rank(const SetGraph<Set>& g, const PipelineConfig& cfg) {
  switch (cfg.ordering) {
    case OrderingKind::None: return Rank::identity(g.num_vertices());
    case OrderingKind::Degree: return degree_order(g);
    case OrderingKind::Degeneracy: return degeneracy_order(g).first;
    case OrderingKind::ApproxDegeneracy:
      return approx_degeneracy_order(g, cfg.epsilon);
  }
  return Rank::identity(g.num_vertices());
}

std::ofstream open_pattern_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

void write_vertex_line(std::ofstream& out, std::span<const VertexId> ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out << ' ';
    out << ids[i];
  }
  out << '\n';
}

// The kernel stage for one set representation. Returns the pattern count;
// fills kernel-specific extras. `emit_patterns` selects the extra untimed
// pattern-export run.
template <VertexSet Set>
struct KernelRunner {
  const PipelineConfig& cfg;
  const SetGraph<Set>& graph;
  const Rank& rank;
  // linkpred-only state built during preprocess
  const LinkPredictionSplit* split = nullptr;
  const SetGraph<Set>* sparse_graph = nullptr;

  std::uint64_t run(BenchReport& report, bool emit_patterns) const {
    switch (cfg.kernel) {
      case KernelKind::MaximalCliques: {
        BkOptions opts;
        opts.pivoting = cfg.pivoting;
        opts.subgraph_h = cfg.subgraph_h;
        if (emit_patterns) {
          auto out = open_pattern_out(cfg.pattern_out);
          auto sink = CliqueSink::streaming([&out](std::span<const VertexId> c) {
            write_vertex_line(out, c);
          });
          maximal_cliques(graph, rank, opts, sink, cfg.threads);
          return sink.count();
        }
        auto sink = CliqueSink::counting();
        maximal_cliques(graph, rank, opts, sink, cfg.threads);
        return sink.count();
      }
      case KernelKind::KClique: {
        if (emit_patterns) {
          auto out = open_pattern_out(cfg.pattern_out);
          auto sink = CliqueSink::streaming([&out](std::span<const VertexId> c) {
            write_vertex_line(out, c);
          });
          list_k_cliques(graph, cfg.k, rank, cfg.mode, sink, cfg.threads);
          return sink.count();
        }
        return count_k_cliques(graph, cfg.k, rank, cfg.mode, cfg.threads);
      }
      case KernelKind::KCliqueStar: {
        if (emit_patterns) {
          auto out = open_pattern_out(cfg.pattern_out);
          auto sink = StarSink::streaming(
              [&out](std::span<const VertexId> c, std::span<const VertexId> star) {
                for (std::size_t i = 0; i < c.size(); ++i) {
                  if (i) out << ' ';
                  out << c[i];
                }
                out << " :";
                for (VertexId s : star) out << ' ' << s;
                out << '\n';
              });
          k_clique_stars(graph, cfg.k, rank, sink, cfg.threads);
          return sink.count();
        }
        auto sink = StarSink::counting();
        k_clique_stars(graph, cfg.k, rank, sink, cfg.threads);
        return sink.count();
      }
      case KernelKind::Triangles:
        return triangle_count(graph, cfg.threads);
      case KernelKind::KCore: {
        auto [peel, cores] = degeneracy_order(graph);
        report.extras["degeneracy"] = static_cast<double>(cores.degeneracy);
        if (cfg.k == 0) {
          if (emit_patterns) {
            auto out = open_pattern_out(cfg.pattern_out);
            for (VertexId v = 0; v < graph.num_vertices(); ++v)
              out << v << ' ' << cores.core[v] << '\n';
          }
          return graph.num_vertices();
        }
        const Set members = core_subgraph_from<Set>(cores, cfg.k);
        if (emit_patterns) {
          auto out = open_pattern_out(cfg.pattern_out);
          for (VertexId v : members.to_sorted_vector()) out << v << '\n';
        }
        return members.cardinality();
      }
      case KernelKind::LinkPred: {
        const auto result = evaluate_link_prediction_on(*sparse_graph, *split,
                                                        cfg.measure, cfg.threads);
        report.extras["eff"] = static_cast<double>(result.eff);
        report.extras["precision"] = result.precision;
        if (emit_patterns) {
          auto out = open_pattern_out(cfg.pattern_out);
          char buf[64];
          for (const auto& sp :
               ranked_predictions(*sparse_graph, cfg.measure, cfg.threads)) {
            const int len = std::snprintf(buf, sizeof(buf), "%.17g", sp.score);
            out << sp.edge.first << ' ' << sp.edge.second << ' '
                << std::string_view(buf, len) << '\n';
          }
        }
        return result.scored;
      }
      case KernelKind::JarvisPatrick: {
        const Clustering clusters = jarvis_patrick(graph, cfg.tau, cfg.threads);
        if (emit_patterns) {
          auto out = open_pattern_out(cfg.pattern_out);
          for (VertexId v = 0; v < clusters.label.size(); ++v)
            out << v << ' ' << clusters.label[v] << '\n';
        }
        return clusters.cluster_count;
      }
    }
    throw std::logic_error("unhandled kernel");
  }
};

template <VertexSet Set>
BenchReport run_impl(const PipelineConfig& cfg) {
  BenchReport report;
  report.input = cfg.input_label();
  report.set_impl = to_string(cfg.set_impl);
  report.ordering = cfg.ordering_label();
  report.kernel = to_string(cfg.kernel);
  report.k = cfg.k;
  report.threads = cfg.threads > 0 ? cfg.threads
                                   : static_cast<std::uint32_t>(omp_get_max_threads());
  report.repetitions = cfg.repetitions;
  report.seed = cfg.seed;
  report.warmup_discarded = cfg.repetitions >= 2;

  const auto wall_start = Clock::now();
  try {
    // Stage 1: load (file parse or synthetic generation).
    auto t = Clock::now();
    EdgeList edges;
    if (cfg.generator) {
      const GeneratorSpec& gen = *cfg.generator;
      edges = gen.kind == GeneratorSpec::Kind::ErdosRenyi
                  ? generate_erdos_renyi(gen.n, gen.p, cfg.seed)
                  : generate_powerlaw(gen.scale, gen.edge_factor, cfg.seed);
    } else {
      edges = load_edge_list(cfg.input_path, LoadOptions{cfg.one_based});
    }
    report.load_s = seconds_since(t);

    // Stage 2: build the set-centric representation.
    t = Clock::now();
    const auto graph = SetGraph<Set>::from_edges(edges);
    report.build_s = seconds_since(t);
    report.adjacency_bytes = graph.representation_size();

    // Stage 3: preprocess (vertex reordering; linkpred also derives its
    // edge split and sparse graph here).
    t = Clock::now();
    const Rank rank = make_rank(graph, cfg);
    LinkPredictionSplit split;
    SetGraph<Set> sparse_graph;
    if (cfg.kernel == KernelKind::LinkPred) {
      split = make_split(graph, cfg.removal_fraction, cfg.seed);
      EdgeList sparse_edges;
      sparse_edges.n = split.n;
      sparse_edges.pairs = split.sparse_edges;
      sparse_graph = SetGraph<Set>::from_edges(sparse_edges);
    }
    report.preprocess_s = seconds_since(t);

    // Stage 4: kernel, repeated.
    KernelRunner<Set> runner{cfg, graph, rank, &split, &sparse_graph};
    for (std::uint32_t rep = 0; rep < cfg.repetitions; ++rep) {
      t = Clock::now();
      const std::uint64_t patterns = runner.run(report, false);
      report.kernel_raw_s.push_back(seconds_since(t));
      if (rep == 0)
        report.pattern_count = patterns;
      else if (patterns != report.pattern_count)
        throw std::logic_error("pattern count changed across repetitions");
    }
    if (!cfg.pattern_out.empty()) runner.run(report, true);

    report.total_wall_s = seconds_since(wall_start);
    return report;
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    report.total_wall_s = seconds_since(wall_start);
    throw PipelineError(e.what(), report);
  }
}

}  // namespace

const char* to_string(SetImpl impl) {
  switch (impl) {
    case SetImpl::Sorted: return "sorted";
    case SetImpl::Hybrid: return "hybrid";
    case SetImpl::Hash: return "hash";
  }
  return "?";
}

const char* to_string(KernelKind kernel) {
  switch (kernel) {
    case KernelKind::MaximalCliques: return "mc";
    case KernelKind::KClique: return "kclique";
    case KernelKind::KCliqueStar: return "kcliquestar";
    case KernelKind::Triangles: return "triangles";
    case KernelKind::KCore: return "kcore";
    case KernelKind::LinkPred: return "linkpred";
    case KernelKind::JarvisPatrick: return "jp";
  }
  return "?";
}

std::optional<SetImpl> parse_set_impl(const std::string& name) {
  for (SetImpl impl : {SetImpl::Sorted, SetImpl::Hybrid, SetImpl::Hash})
    if (name == to_string(impl)) return impl;
  return std::nullopt;
}

std::optional<KernelKind> parse_kernel(const std::string& name) {
  for (KernelKind kernel :
       {KernelKind::MaximalCliques, KernelKind::KClique, KernelKind::KCliqueStar,
        KernelKind::Triangles, KernelKind::KCore, KernelKind::LinkPred,
        KernelKind::JarvisPatrick})
    if (name == to_string(kernel)) return kernel;
  return std::nullopt;
}

std::string GeneratorSpec::label(std::uint64_t seed) const {
  std::ostringstream out;
  if (kind == Kind::ErdosRenyi)
    out << "er(n=" << n << ",p=" << format_short_double(p) << ",seed=" << seed << ")";
  else
    out << "kron(scale=" << scale << ",factor=" << edge_factor << ",seed=" << seed
        << ")";
  return out.str();
}

std::string PipelineConfig::input_label() const {
  return generator ? generator->label(seed) : input_path;
}

std::string PipelineConfig::ordering_label() const {
  switch (ordering) {
    case OrderingKind::None: return "none";
    case OrderingKind::Degree: return "deg";
    case OrderingKind::Degeneracy: return "dgr";
    case OrderingKind::ApproxDegeneracy:
      return "adg(" + format_short_double(epsilon) + ")";
  }
  return "?";
}

void PipelineConfig::validate() const {
  if (!generator && input_path.empty())
    throw std::invalid_argument("no input: give a file path or a generator spec");
  if (generator && generator->kind == GeneratorSpec::Kind::ErdosRenyi &&
      !(generator->p >= 0.0 && generator->p <= 1.0))
    throw std::invalid_argument("generator probability must be in [0, 1]");
  if (generator && generator->kind == GeneratorSpec::Kind::Kronecker &&
      generator->scale == 0)
    throw std::invalid_argument("generator scale must be >= 1");
  if ((kernel == KernelKind::KClique || kernel == KernelKind::KCliqueStar) && k < 2)
    throw std::invalid_argument("kernel requires k >= 2");
  if (kernel == KernelKind::LinkPred &&
      !(removal_fraction > 0.0 && removal_fraction < 1.0))
    throw std::invalid_argument("linkpred requires a removal fraction in (0, 1)");
  if (ordering == OrderingKind::ApproxDegeneracy && !(epsilon >= 0.0))
    throw std::invalid_argument("epsilon must be >= 0");
  if (repetitions == 0) throw std::invalid_argument("repetitions must be >= 1");
  if (threads < 0) throw std::invalid_argument("threads must be >= 1 (or 0 for all)");
}

BenchReport run_pipeline(const PipelineConfig& cfg) {
  cfg.validate();
  switch (cfg.set_impl) {
    case SetImpl::Sorted: return run_impl<SortedArraySet>(cfg);
    case SetImpl::Hybrid: return run_impl<HybridBitmapSet>(cfg);
    case SetImpl::Hash: return run_impl<HashVertexSet>(cfg);
  }
  throw std::logic_error("unhandled set implementation");
}

std::vector<BenchReport> scaling_sweep(PipelineConfig cfg,
                                       const std::vector<int>& thread_counts) {
  if (thread_counts.empty())
    throw std::invalid_argument("thread count list is empty");
  for (int t : thread_counts)
    if (t < 1) throw std::invalid_argument("thread counts must be >= 1");
  std::vector<BenchReport> reports;
  reports.reserve(thread_counts.size());
  for (int t : thread_counts) {
    cfg.threads = t;
    reports.push_back(run_pipeline(cfg));
    if (reports.back().pattern_count != reports.front().pattern_count)
      throw std::logic_error("pattern count varied across thread counts");
  }
  return reports;
}

}  // namespace setminer
