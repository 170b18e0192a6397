#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <omp.h>

#include "setminer/clique_sink.hpp"
#include "setminer/directed_view.hpp"
#include "setminer/ordering.hpp"
#include "setminer/set_graph.hpp"
#include "setminer/types.hpp"
#include "setminer/vertex_set.hpp"

namespace setminer {

enum class KCliqueMode { VertexParallel, EdgeParallel };

namespace detail {

// Counts completions of the current partial clique. C holds the valid i-th
// members; each chosen v narrows the candidates to N+(v) n C.
template <VertexSet Set>
std::uint64_t kc_count(const DirectedView<Set>& dir, unsigned i, unsigned k,
                       const Set& c) {
  if (i == k) return c.cardinality();
  std::uint64_t total = 0;
  c.for_each([&](VertexId v) {
    const Set next = dir.out_neighbors(v).intersect(c);
    if (!next.empty()) total += kc_count(dir, i + 1, k, next);
  });
  return total;
}

template <VertexSet Set, typename EmitFn>
void kc_list(const DirectedView<Set>& dir, unsigned i, unsigned k, const Set& c,
             std::vector<VertexId>& r, EmitFn&& emit) {
  if (i == k) {
    c.for_each([&](VertexId v) {
      r.push_back(v);
      emit(r);
      r.pop_back();
    });
    return;
  }
  c.for_each([&](VertexId v) {
    const Set next = dir.out_neighbors(v).intersect(c);
    if (!next.empty()) {
      r.push_back(v);
      kc_list(dir, i + 1, k, next, r, emit);
      r.pop_back();
    }
  });
}

inline int resolve_threads(int threads) {
  return threads > 0 ? threads : omp_get_max_threads();
}

// Directed edges (u, v in N+(u)) as a flat task array for edge-parallel
// scheduling.
template <VertexSet Set>
std::vector<Edge> directed_edge_tasks(const DirectedView<Set>& dir) {
  std::vector<Edge> tasks;
  tasks.reserve(dir.base().num_edges());
  for (VertexId u = 0; u < dir.base().num_vertices(); ++u)
    for (VertexId v : dir.out_neighbors(u).to_sorted_vector())
      tasks.emplace_back(u, v);
  return tasks;
}

}  // namespace detail

// Exact number of k-vertex complete subgraphs, counted over the acyclic
// orientation dir(G) given by `rank`. The result does not depend on the
// mode, the order, the set representation or the thread count. k larger
// than n (or an empty graph) yields 0.
template <VertexSet Set>
std::uint64_t count_k_cliques(const SetGraph<Set>& g, unsigned k, const Rank& rank,
                              KCliqueMode mode = KCliqueMode::VertexParallel,
                              int threads = 0) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  const DirectedView<Set> dir(g, rank);
  const int nt = detail::resolve_threads(threads);
  std::uint64_t total = 0;

  if (mode == KCliqueMode::VertexParallel) {
    const std::int64_t n = g.num_vertices();
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total) num_threads(nt)
    for (std::int64_t v = 0; v < n; ++v)
      total += detail::kc_count(dir, 2, k, dir.out_neighbors(static_cast<VertexId>(v)));
  } else {
    const auto tasks = detail::directed_edge_tasks(dir);
    const std::int64_t m = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total) num_threads(nt)
    for (std::int64_t t = 0; t < m; ++t) {
      const auto [u, v] = tasks[t];
      if (k == 2) {
        total += 1;
      } else {
        const Set c3 = dir.out_neighbors(u).intersect(dir.out_neighbors(v));
        if (!c3.empty()) total += detail::kc_count(dir, 3, k, c3);
      }
    }
  }
  return total;
}

// Same search with emission at depth k; the sink's count equals
// count_k_cliques.
template <VertexSet Set>
void list_k_cliques(const SetGraph<Set>& g, unsigned k, const Rank& rank,
                    KCliqueMode mode, CliqueSink& sink, int threads = 0) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  const DirectedView<Set> dir(g, rank);
  const int nt = detail::resolve_threads(threads);

  std::exception_ptr failure = nullptr;
  std::mutex failure_mutex;
  bool stop = false;
  auto guarded = [&](auto&& body) {
    if (stop) return;
    try {
      body();
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  };
  auto emit = [&sink](std::vector<VertexId>& r) {
    std::vector<VertexId> clique = r;
    std::sort(clique.begin(), clique.end());
    sink.emit(clique);
  };

  if (mode == KCliqueMode::VertexParallel) {
    const std::int64_t n = g.num_vertices();
#pragma omp parallel for schedule(dynamic, 64) num_threads(nt)
    for (std::int64_t v = 0; v < n; ++v)
      guarded([&] {
        std::vector<VertexId> r{static_cast<VertexId>(v)};
        detail::kc_list(dir, 2, k, dir.out_neighbors(static_cast<VertexId>(v)), r, emit);
      });
  } else {
    const auto tasks = detail::directed_edge_tasks(dir);
    const std::int64_t m = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(nt)
    for (std::int64_t t = 0; t < m; ++t)
      guarded([&] {
        const auto [u, v] = tasks[t];
        std::vector<VertexId> r{u, v};
        if (k == 2) {
          emit(r);
        } else {
          const Set c3 = dir.out_neighbors(u).intersect(dir.out_neighbors(v));
          if (!c3.empty()) detail::kc_list(dir, 3, k, c3, r, emit);
        }
      });
  }
  if (failure) std::rethrow_exception(failure);
}

// k = 3 specialization: sum over directed edges of |N+(u) n N+(v)|,
// oriented by degree order.
template <VertexSet Set>
std::uint64_t triangle_count(const SetGraph<Set>& g, int threads = 0) {
  const Rank rank = degree_order(g);
  const DirectedView<Set> dir(g, rank);
  const int nt = detail::resolve_threads(threads);
  const std::int64_t n = g.num_vertices();
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total) num_threads(nt)
  for (std::int64_t u = 0; u < n; ++u) {
    const Set& out = dir.out_neighbors(static_cast<VertexId>(u));
    out.for_each([&](VertexId v) { total += out.intersect_count(dir.out_neighbors(v)); });
  }
  return total;
}

// Emits every k-clique C whose star set S(C) — the vertices adjacent to all
// of C, excluding C itself — is nonempty, paired with that star set. Each
// such vertex extends C to a (k+1)-clique.
template <VertexSet Set>
void k_clique_stars(const SetGraph<Set>& g, unsigned k, const Rank& rank,
                    StarSink& sink, int threads = 0) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  const DirectedView<Set> dir(g, rank);
  const int nt = detail::resolve_threads(threads);

  std::exception_ptr failure = nullptr;
  std::mutex failure_mutex;
  bool stop = false;

  auto emit_star = [&](std::vector<VertexId>& r) {
    std::vector<VertexId> clique = r;
    std::sort(clique.begin(), clique.end());
    Set star = g.neighbors(clique[0]).clone();
    for (std::size_t i = 1; i < clique.size(); ++i)
      star.intersect_inplace(g.neighbors(clique[i]));
    star.diff_inplace(Set::from_sorted(clique));
    if (!star.empty()) sink.emit(clique, star.to_sorted_vector());
  };

  const std::int64_t n = g.num_vertices();
#pragma omp parallel for schedule(dynamic, 64) num_threads(nt)
  for (std::int64_t v = 0; v < n; ++v) {
    if (stop) continue;
    try {
      std::vector<VertexId> r{static_cast<VertexId>(v)};
      detail::kc_list(dir, 2, k, dir.out_neighbors(static_cast<VertexId>(v)), r, emit_star);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace setminer
