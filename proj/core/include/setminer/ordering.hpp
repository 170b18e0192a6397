#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

#include "setminer/set_graph.hpp"
#include "setminer/types.hpp"
#include "setminer/vertex_set.hpp"

namespace setminer {

// Bijective vertex ordering. rank_of[v] is v's position in [0, n). For the
// batched approximate order, batch_offsets records the rank-space boundary
// of each batch (vertices of earlier batches always rank strictly lower);
// single-batch orders carry the trivial [0, n] boundary.
struct Rank {
  std::vector<std::uint32_t> rank_of;
  std::uint32_t batch_count = 1;
  std::vector<std::uint32_t> batch_offsets;

  static Rank identity(VertexId n) {
    Rank r;
    r.rank_of.resize(n);
    for (VertexId v = 0; v < n; ++v) r.rank_of[v] = v;
    r.batch_count = 1;
    r.batch_offsets = {0, n};
    return r;
  }

  bool is_permutation() const {
    std::vector<bool> seen(rank_of.size(), false);
    for (std::uint32_t r : rank_of) {
      if (r >= rank_of.size() || seen[r]) return false;
      seen[r] = true;
    }
    return true;
  }

  // Vertices sorted by rank (inverse permutation).
  std::vector<VertexId> order() const {
    std::vector<VertexId> out(rank_of.size());
    for (VertexId v = 0; v < rank_of.size(); ++v) out[rank_of[v]] = v;
    return out;
  }
};

struct CoreDecomposition {
  std::vector<std::uint32_t> core;
  std::uint32_t degeneracy = 0;
};

// Rank ascending by degree, ties by ascending vertex id.
template <VertexSet Set>
Rank degree_order(const SetGraph<Set>& g) {
  const VertexId n = g.num_vertices();
  std::vector<std::vector<VertexId>> buckets(g.max_degree() + 1);
  for (VertexId v = 0; v < n; ++v) buckets[g.degree(v)].push_back(v);

  Rank r;
  r.rank_of.resize(n);
  std::uint32_t next = 0;
  for (const auto& bucket : buckets)
    for (VertexId v : bucket) r.rank_of[v] = next++;
  r.batch_count = 1;
  r.batch_offsets = {0, n};
  return r;
}

// Exact degeneracy order: repeatedly remove a vertex of minimum current
// degree (smallest id on ties). Core numbers are the classic peeling values;
// the degeneracy is their maximum. Bucket selection uses one lazy min-heap
// per degree, so ranks are deterministic at an O(log n) factor over the
// plain bucket scheme.
template <VertexSet Set>
std::pair<Rank, CoreDecomposition> degeneracy_order(const SetGraph<Set>& g) {
  const VertexId n = g.num_vertices();
  Rank r;
  r.rank_of.resize(n);
  r.batch_count = 1;
  r.batch_offsets = {0, n};
  CoreDecomposition cores;
  cores.core.resize(n, 0);

  using MinHeap = std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>>;
  std::vector<MinHeap> buckets(g.max_degree() + 1);
  std::vector<std::uint32_t> deg(n);
  std::vector<bool> removed(n, false);
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree(v));
    buckets[deg[v]].push(v);
  }

  std::size_t min_deg = 0;
  std::uint32_t level = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    VertexId v = 0;
    for (;;) {
      while (min_deg < buckets.size() && buckets[min_deg].empty()) ++min_deg;
      v = buckets[min_deg].top();
      buckets[min_deg].pop();
      if (!removed[v] && deg[v] == min_deg) break;  // skip stale entries
    }
    removed[v] = true;
    level = std::max(level, static_cast<std::uint32_t>(min_deg));
    cores.core[v] = level;
    r.rank_of[v] = i;
    g.neighbors(v).for_each([&](VertexId u) {
      if (removed[u]) return;
      --deg[u];
      buckets[deg[u]].push(u);
      if (deg[u] < min_deg) min_deg = deg[u];
    });
  }
  cores.degeneracy = level;
  return {std::move(r), std::move(cores)};
}

// Approximate degeneracy order: every iteration removes the batch of live
// vertices whose degree is at most (1 + eps) times the live average degree,
// assigning ranks batch by batch (ascending id inside a batch). The
// threshold test is exact: eps is taken as the rational round(eps * 1e9)/1e9
// and compared in 128-bit integer arithmetic, so no float rounding can move
// a vertex across the cut.
template <VertexSet Set>
Rank approx_degeneracy_order(const SetGraph<Set>& g, double eps) {
  if (!(eps >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  const VertexId n = g.num_vertices();
  constexpr std::uint64_t kEpsDen = 1'000'000'000;
  const std::uint64_t eps_num = static_cast<std::uint64_t>(std::llround(eps * kEpsDen));

  Rank r;
  r.rank_of.resize(n);
  r.batch_count = 0;
  r.batch_offsets = {0};

  std::vector<std::uint32_t> deg(n);
  std::vector<bool> alive(n, true);
  std::vector<VertexId> live;
  live.reserve(n);
  unsigned __int128 sum_deg = 0;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree(v));
    sum_deg += deg[v];
    live.push_back(v);
  }

  std::uint32_t next_rank = 0;
  std::vector<VertexId> batch;
  while (!live.empty()) {
    const unsigned __int128 rhs = (unsigned __int128)(kEpsDen + eps_num) * sum_deg;
    const unsigned __int128 u_count = live.size();
    batch.clear();
    for (VertexId v : live) {
      // deg(v) <= (1 + eps) * sum_deg / |U|, cross-multiplied.
      if ((unsigned __int128)deg[v] * u_count * kEpsDen <= rhs) batch.push_back(v);
    }
    for (VertexId v : batch) {
      r.rank_of[v] = next_rank++;  // live list is id-ascending, so batch is too
      alive[v] = false;
    }
    for (VertexId v : batch)
      g.neighbors(v).for_each([&](VertexId u) {
        if (alive[u]) --deg[u];
      });

    std::vector<VertexId> still;
    still.reserve(live.size() - batch.size());
    sum_deg = 0;
    for (VertexId v : live) {
      if (alive[v]) {
        still.push_back(v);
        sum_deg += deg[v];
      }
    }
    live.swap(still);
    ++r.batch_count;
    r.batch_offsets.push_back(next_rank);
  }
  if (r.batch_count == 0) {  // empty graph: keep a well-formed boundary list
    r.batch_count = 1;
    r.batch_offsets = {0, 0};
  }
  return r;
}

// Vertices of the k-core: {v : core(v) >= k}. Empty when k exceeds the
// degeneracy.
template <VertexSet Set>
Set core_subgraph_from(const CoreDecomposition& cores, std::uint32_t k) {
  std::vector<VertexId> members;
  for (VertexId v = 0; v < cores.core.size(); ++v)
    if (cores.core[v] >= k) members.push_back(v);
  return Set::from_sorted(members);
}

template <VertexSet Set>
Set core_subgraph(const SetGraph<Set>& g, std::uint32_t k) {
  auto [rank, cores] = degeneracy_order(g);
  return core_subgraph_from<Set>(cores, k);
}

}  // namespace setminer
