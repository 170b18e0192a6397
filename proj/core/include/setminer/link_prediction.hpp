#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include <omp.h>

#include "setminer/rng.hpp"
#include "setminer/set_graph.hpp"
#include "setminer/similarity.hpp"
#include "setminer/types.hpp"
#include "setminer/vertex_set.hpp"

namespace setminer {

// Edge split for link-prediction accuracy runs: removed_edges are the
// round(f * m) edges sampled without replacement, sparse_edges the rest.
// Their union is E and their intersection empty.
struct LinkPredictionSplit {
  VertexId n = 0;
  std::vector<Edge> sparse_edges;
  std::vector<Edge> removed_edges;
  std::uint64_t seed = 0;
};

struct LinkPredictionResult {
  std::uint64_t eff = 0;       // |E_predict n E_rndm|
  double precision = 0.0;      // eff / |E_rndm|
  std::uint64_t scored = 0;    // candidate pairs whose score was computed
};

struct ScoredPair {
  double score;
  Edge edge;
};

template <VertexSet Set>
LinkPredictionSplit make_split(const SetGraph<Set>& g, double removal_fraction,
                               std::uint64_t seed) {
  if (!(removal_fraction > 0.0 && removal_fraction < 1.0))
    throw std::invalid_argument("removal fraction must be in (0, 1)");
  std::vector<Edge> edges = g.edges();
  const std::size_t m = edges.size();
  if (m == 0) throw std::invalid_argument("graph has no edges to split");
  const auto removed =
      static_cast<std::size_t>(std::llround(removal_fraction * static_cast<double>(m)));
  if (removed == 0)
    throw std::invalid_argument("removal fraction selects zero edges");

  Rng rng(seed);
  for (std::size_t i = 0; i < removed; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.next_below(m - i));
    std::swap(edges[i], edges[j]);
  }
  LinkPredictionSplit split;
  split.n = g.num_vertices();
  split.seed = seed;
  split.removed_edges.assign(edges.begin(), edges.begin() + removed);
  split.sparse_edges.assign(edges.begin() + removed, edges.end());
  std::sort(split.removed_edges.begin(), split.removed_edges.end());
  std::sort(split.sparse_edges.begin(), split.sparse_edges.end());
  return split;
}

namespace detail {

inline std::uint64_t edge_key(const Edge& e) {
  return (static_cast<std::uint64_t>(e.first) << 32) | e.second;
}

// a ranks before b in the prediction order: higher score first, then
// lexicographic edge order.
inline bool predicted_before(const ScoredPair& a, const ScoredPair& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.edge < b.edge;
}

// Non-edge pairs within distance 2 of the sparse graph: the only pairs a
// common-neighbor measure can score above zero.
template <VertexSet Set>
std::vector<Edge> distance2_candidates(const SetGraph<Set>& g) {
  std::vector<std::uint64_t> keys;
  for (VertexId w = 0; w < g.num_vertices(); ++w) {
    const auto nbrs = g.neighbors(w).to_sorted_vector();
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (!g.neighbors(nbrs[i]).contains(nbrs[j]))
          keys.push_back(edge_key({nbrs[i], nbrs[j]}));
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<Edge> out;
  out.reserve(keys.size());
  for (std::uint64_t k : keys)
    out.push_back({static_cast<VertexId>(k >> 32),
                   static_cast<VertexId>(k & 0xffffffffu)});
  return out;
}

}  // namespace detail

// Scores every non-edge of the sparse graph with `measure`, takes the
// |E_rndm| top-ranked pairs (ties broken lexicographically) as E_predict,
// and reports eff = |E_predict n E_rndm|.
//
// Common-neighbor measures restrict scoring to pairs at distance 2; every
// other non-edge scores exactly 0 and only enters E_predict as a
// lexicographic filler when positive-scored pairs run out, which matches
// scoring the full pool. TotalNeighbors and PreferentialAttachment need the
// full pool and are limited to n <= 20,000.
template <VertexSet Set>
LinkPredictionResult evaluate_link_prediction_on(const SetGraph<Set>& g,
                                                 const LinkPredictionSplit& split,
                                                 SimilarityMeasure measure,
                                                 int threads = 0) {
  const std::size_t target = split.removed_edges.size();
  if (target == 0) throw std::invalid_argument("split has no removed edges");
  const VertexId n = split.n;

  std::vector<ScoredPair> predict;
  std::uint64_t scored = 0;

  if (depends_on_common_neighbors(measure)) {
    const std::vector<Edge> candidates = detail::distance2_candidates(g);
    std::vector<ScoredPair> pool(candidates.size());
    const int nt = threads > 0 ? threads : omp_get_max_threads();
    const std::int64_t count = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(static) num_threads(nt)
    for (std::int64_t i = 0; i < count; ++i)
      pool[i] = {similarity(g, candidates[i].first, candidates[i].second, measure),
                 candidates[i]};
    scored = pool.size();
    std::sort(pool.begin(), pool.end(), detail::predicted_before);
    if (pool.size() > target) pool.resize(target);
    predict = std::move(pool);
  } else {
    if (n > 20'000)
      throw std::invalid_argument(
          "full candidate pool for TotalNeighbors/PreferentialAttachment is "
          "limited to n <= 20000; use a common-neighbor measure or a smaller "
          "graph");
    // Keep the `target` best seen so far; the heap top is the worst kept
    // pair, so a new pair replaces it only when it ranks strictly earlier.
    std::priority_queue<ScoredPair, std::vector<ScoredPair>,
                        bool (*)(const ScoredPair&, const ScoredPair&)>
        best(detail::predicted_before);
    for (VertexId u = 0; u < n; ++u) {
      const Set& nu = g.neighbors(u);
      for (VertexId v = u + 1; v < n; ++v) {
        if (nu.contains(v)) continue;
        ++scored;
        ScoredPair sp{similarity(g, u, v, measure), Edge{u, v}};
        if (best.size() < target) {
          best.push(sp);
        } else if (detail::predicted_before(sp, best.top())) {
          best.pop();
          best.push(sp);
        }
      }
    }
    predict.reserve(best.size());
    while (!best.empty()) {
      predict.push_back(best.top());
      best.pop();
    }
    std::sort(predict.begin(), predict.end(), detail::predicted_before);
  }

  // Positive-scored pairs exhausted: fill E_predict with the
  // lexicographically smallest remaining non-edges, all tied at score 0.
  if (predict.size() < target) {
    std::unordered_set<std::uint64_t> taken;
    taken.reserve(predict.size() * 2);
    for (const ScoredPair& sp : predict) taken.insert(detail::edge_key(sp.edge));
    for (VertexId u = 0; u < n && predict.size() < target; ++u) {
      const Set& nu = g.neighbors(u);
      for (VertexId v = u + 1; v < n && predict.size() < target; ++v) {
        if (nu.contains(v)) continue;
        const Edge e{u, v};
        if (taken.count(detail::edge_key(e))) continue;
        predict.push_back({0.0, e});
      }
    }
  }

  std::unordered_set<std::uint64_t> removed;
  removed.reserve(split.removed_edges.size() * 2);
  for (const Edge& e : split.removed_edges) removed.insert(detail::edge_key(e));

  LinkPredictionResult result;
  result.scored = scored;
  for (const ScoredPair& sp : predict)
    result.eff += removed.count(detail::edge_key(sp.edge));
  result.precision = static_cast<double>(result.eff) / static_cast<double>(target);
  return result;
}

template <VertexSet Set>
LinkPredictionResult evaluate_link_prediction(const LinkPredictionSplit& split,
                                              SimilarityMeasure measure,
                                              int threads = 0) {
  EdgeList sparse;
  sparse.n = split.n;
  sparse.pairs = split.sparse_edges;
  const auto g = SetGraph<Set>::from_edges(sparse);
  return evaluate_link_prediction_on(g, split, measure, threads);
}

// The ranked predictions themselves (descending score, then lexicographic),
// for export. Covers the scored pool only.
template <VertexSet Set>
std::vector<ScoredPair> ranked_predictions(const SetGraph<Set>& g,
                                           SimilarityMeasure measure,
                                           int threads = 0) {
  std::vector<Edge> candidates;
  if (depends_on_common_neighbors(measure)) {
    candidates = detail::distance2_candidates(g);
  } else {
    if (g.num_vertices() > 20'000)
      throw std::invalid_argument("full candidate pool limited to n <= 20000");
    for (VertexId u = 0; u < g.num_vertices(); ++u)
      for (VertexId v = u + 1; v < g.num_vertices(); ++v)
        if (!g.neighbors(u).contains(v)) candidates.push_back({u, v});
  }
  std::vector<ScoredPair> pool(candidates.size());
  const int nt = threads > 0 ? threads : omp_get_max_threads();
  const std::int64_t count = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(static) num_threads(nt)
  for (std::int64_t i = 0; i < count; ++i)
    pool[i] = {similarity(g, candidates[i].first, candidates[i].second, measure),
               candidates[i]};
  std::sort(pool.begin(), pool.end(), detail::predicted_before);
  return pool;
}

}  // namespace setminer
