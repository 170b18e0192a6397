#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <omp.h>

#include "setminer/clique_sink.hpp"
#include "setminer/ordering.hpp"
#include "setminer/set_graph.hpp"
#include "setminer/types.hpp"
#include "setminer/vertex_set.hpp"

namespace setminer {

struct BkOptions {
  bool pivoting = true;
  // Precompute, once per seed vertex, the subgraph induced on P u X and run
  // all deeper set operations against its smaller neighborhoods.
  bool subgraph_h = false;
  // Test instrumentation: called with the current (sorted) partial clique R
  // at every recursion node. Leave empty in production; callers using it
  // should run single-threaded.
  std::function<void(std::span<const VertexId>)> on_state;
};

// Pivot choice for the Bron-Kerbosch recursion: the vertex u of P u X that
// minimizes |P \ N(u)| (equivalently maximizes |P n N(u)|), smallest id on
// ties. Throws if P u X is empty, in which case the caller must emit R
// instead of recursing.
template <VertexSet Set, typename NbrFn>
VertexId bk_pivot_select(const Set& p, const Set& x, NbrFn&& nbrs) {
  if (p.empty() && x.empty())
    throw std::invalid_argument("bk_pivot_select: P u X is empty");
  bool found = false;
  VertexId best = 0;
  std::size_t best_common = 0;
  auto consider = [&](VertexId u) {
    const std::size_t common = p.intersect_count(nbrs(u));
    if (!found || common > best_common || (common == best_common && u < best)) {
      found = true;
      best_common = common;
      best = u;
    }
  };
  p.for_each(consider);
  x.for_each(consider);
  return best;
}

namespace detail {

template <VertexSet Set, typename NbrFn>
void bk_recurse(Set p, Set x, std::vector<VertexId>& r, NbrFn&& nbrs,
                const BkOptions& opts, CliqueSink& sink) {
  if (opts.on_state) {
    std::vector<VertexId> state = r;
    std::sort(state.begin(), state.end());
    opts.on_state(state);
  }
  if (p.empty()) {
    if (x.empty()) {
      std::vector<VertexId> clique = r;
      std::sort(clique.begin(), clique.end());
      sink.emit(clique);
    }
    return;
  }
  std::vector<VertexId> candidates;
  if (opts.pivoting) {
    const VertexId u = bk_pivot_select(p, x, nbrs);
    candidates = p.diff(nbrs(u)).to_sorted_vector();
  } else {
    candidates = p.to_sorted_vector();
  }
  for (VertexId v : candidates) {
    const Set& nv = nbrs(v);
    r.push_back(v);
    bk_recurse(p.intersect(nv), x.intersect(nv), r, nbrs, opts, sink);
    r.pop_back();
    p.remove(v);
    x.add(v);
  }
}

// Seed-level state for one outer iteration: P = later-ranked neighbors,
// X = earlier-ranked neighbors of the seed.
template <VertexSet Set>
std::pair<Set, Set> split_neighbors(const SetGraph<Set>& g, const Rank& rank,
                                    VertexId seed) {
  std::vector<VertexId> later, earlier;
  const std::uint32_t rs = rank.rank_of[seed];
  g.neighbors(seed).for_each([&](VertexId u) {
    (rank.rank_of[u] > rs ? later : earlier).push_back(u);
  });
  std::sort(later.begin(), later.end());
  std::sort(earlier.begin(), earlier.end());
  return {Set::from_sorted(later), Set::from_sorted(earlier)};
}

}  // namespace detail

// Enumerates every maximal clique exactly once (Bron-Kerbosch over a vertex
// order, with optional pivoting and per-seed induced subgraphs). The emitted
// set is independent of the order, the options, the set representation and
// the thread count. Seeds run in parallel with dynamic scheduling; recursion
// inside a seed is sequential.
template <VertexSet Set>
void maximal_cliques(const SetGraph<Set>& g, const Rank& rank,
                     const BkOptions& opts, CliqueSink& sink, int threads = 0) {
  const VertexId n = g.num_vertices();
  if (rank.rank_of.size() != n || !rank.is_permutation())
    throw std::invalid_argument("rank is not a bijection on [0, n)");
  const auto order = rank.order();
  const int nt = threads > 0 ? threads : omp_get_max_threads();

  std::exception_ptr failure = nullptr;
  std::mutex failure_mutex;
  bool stop = false;

#pragma omp parallel for schedule(dynamic, 16) num_threads(nt)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    if (stop) continue;
    try {
      const VertexId seed = order[i];
      auto [p, x] = detail::split_neighbors(g, rank, seed);
      std::vector<VertexId> r{seed};
      if (opts.subgraph_h) {
        // H is the subgraph induced on P u X, restricted to edges with at
        // least one endpoint in P; built once per seed and reused at every
        // depth below it.
        std::unordered_map<VertexId, Set> h;
        const Set px = p.union_with(x);
        h.reserve(px.cardinality());
        px.for_each([&](VertexId w) {
          const Set& nw = g.neighbors(w);
          h.emplace(w, p.contains(w) ? nw.intersect(px) : nw.intersect(p));
        });
        auto nbrs = [&h](VertexId w) -> const Set& { return h.at(w); };
        detail::bk_recurse(std::move(p), std::move(x), r, nbrs, opts, sink);
      } else {
        auto nbrs = [&g](VertexId w) -> const Set& { return g.neighbors(w); };
        detail::bk_recurse(std::move(p), std::move(x), r, nbrs, opts, sink);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace setminer
