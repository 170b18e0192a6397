#pragma once

// Brute-force reference implementations used as test oracles. Everything
// here works on plain adjacency bitmasks or std containers and never calls
// into the library code it is checking.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Vertex = std::uint32_t;
using EdgeVec = std::vector<std::pair<Vertex, Vertex>>;

// Adjacency-bitmask graph for n <= 64.
struct MaskGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;  // adj[v] bit u set iff {u, v} is an edge

  static MaskGraph from_edges(int n, const EdgeVec& edges) {
    MaskGraph g;
    g.n = n;
    g.adj.assign(n, 0);
    for (auto [u, v] : edges) {
      if (u == v) continue;
      g.adj[u] |= 1ull << v;
      g.adj[v] |= 1ull << u;
    }
    return g;
  }

  bool has_edge(Vertex u, Vertex v) const { return (adj[u] >> v) & 1; }

  bool is_clique(std::uint64_t mask) const {
    for (int v = 0; v < n; ++v) {
      if (!((mask >> v) & 1)) continue;
      const std::uint64_t others = mask & ~(1ull << v);
      if ((adj[v] & others) != others) return false;
    }
    return true;
  }
};

inline std::vector<Vertex> mask_vertices(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return out;
}

// All maximal cliques by subset enumeration, lexicographically sorted.
inline std::vector<std::vector<Vertex>> maximal_cliques(const MaskGraph& g) {
  std::vector<std::vector<Vertex>> out;
  const std::uint64_t full = g.n == 64 ? ~0ull : (1ull << g.n) - 1;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    if (!g.is_clique(mask)) continue;
    bool maximal = true;
    for (int w = 0; w < g.n && maximal; ++w) {
      if ((mask >> w) & 1) continue;
      if ((g.adj[w] & mask) == mask) maximal = false;
    }
    if (maximal) out.push_back(mask_vertices(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Number of k-vertex cliques for every k in [0, n], via one subset sweep.
inline std::vector<std::uint64_t> clique_counts_by_size(const MaskGraph& g) {
  std::vector<std::uint64_t> counts(g.n + 1, 0);
  const std::uint64_t full = g.n == 64 ? ~0ull : (1ull << g.n) - 1;
  for (std::uint64_t mask = 1; mask <= full; ++mask)
    if (g.is_clique(mask)) ++counts[std::popcount(mask)];
  return counts;
}

inline std::uint64_t count_k_cliques(const MaskGraph& g, int k) {
  if (k > g.n) return 0;
  return clique_counts_by_size(g)[k];
}

// Connected-component labels, numbered by smallest member.
inline std::vector<std::uint32_t> components(int n, const EdgeVec& edges) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) {
    if (u == v) continue;
    int a = find(u), b = find(v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::uint32_t> label(n);
  std::map<int, std::uint32_t> seen;
  for (int v = 0; v < n; ++v) {
    int root = find(v);
    auto [it, inserted] = seen.emplace(root, static_cast<std::uint32_t>(seen.size()));
    label[v] = it->second;
  }
  return label;
}

// Independent similarity scoring on std::set adjacency. Mirrors the
// documented conventions: natural log, Adamic-Adar skips degree <= 1,
// Jaccard/Overlap are 0 on empty denominators.
struct SetAdjacency {
  std::vector<std::set<Vertex>> nbr;

  static SetAdjacency from_edges(int n, const EdgeVec& edges) {
    SetAdjacency a;
    a.nbr.resize(n);
    for (auto [u, v] : edges) {
      if (u == v) continue;
      a.nbr[u].insert(v);
      a.nbr[v].insert(u);
    }
    return a;
  }

  std::vector<Vertex> common(Vertex u, Vertex v) const {
    std::vector<Vertex> out;
    std::set_intersection(nbr[u].begin(), nbr[u].end(), nbr[v].begin(),
                          nbr[v].end(), std::back_inserter(out));
    return out;
  }

  double score(Vertex u, Vertex v, const std::string& measure) const {
    const auto com = common(u, v);
    const double inter = static_cast<double>(com.size());
    const double du = static_cast<double>(nbr[u].size());
    const double dv = static_cast<double>(nbr[v].size());
    if (measure == "common-neighbors") return inter;
    if (measure == "total-neighbors") return du + dv - inter;
    if (measure == "preferential-attachment") return du * dv;
    if (measure == "jaccard") {
      const double uni = du + dv - inter;
      return uni == 0.0 ? 0.0 : inter / uni;
    }
    if (measure == "overlap") {
      const double mn = std::min(du, dv);
      return mn == 0.0 ? 0.0 : inter / mn;
    }
    if (measure == "adamic-adar") {
      double s = 0.0;
      for (Vertex w : com)
        if (nbr[w].size() > 1) s += 1.0 / std::log(static_cast<double>(nbr[w].size()));
      return s;
    }
    if (measure == "resource-allocation") {
      double s = 0.0;
      for (Vertex w : com) s += 1.0 / static_cast<double>(nbr[w].size());
      return s;
    }
    throw std::logic_error("unknown measure " + measure);
  }
};

// Link-prediction eff by scoring every non-edge of the sparse graph and
// taking the top |removed| pairs (score descending, lexicographic ties).
inline std::uint64_t linkpred_eff(int n, const EdgeVec& sparse,
                                  const EdgeVec& removed,
                                  const std::string& measure) {
  const auto adj = SetAdjacency::from_edges(n, sparse);
  std::set<std::pair<Vertex, Vertex>> sparse_set(sparse.begin(), sparse.end());
  struct Cand {
    double score;
    std::pair<Vertex, Vertex> e;
  };
  std::vector<Cand> pool;
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
    for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v)
      if (!sparse_set.count({u, v}))
        pool.push_back({adj.score(u, v, measure), {u, v}});
  std::sort(pool.begin(), pool.end(), [](const Cand& a, const Cand& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.e < b.e;
  });
  if (pool.size() > removed.size()) pool.resize(removed.size());
  std::set<std::pair<Vertex, Vertex>> removed_set(removed.begin(), removed.end());
  std::uint64_t eff = 0;
  for (const Cand& c : pool) eff += removed_set.count(c.e);
  return eff;
}

// --- small named graphs -------------------------------------------------

inline EdgeVec complete(int n) {
  EdgeVec e;
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
    for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) e.push_back({u, v});
  return e;
}

inline EdgeVec path(int n) {
  EdgeVec e;
  for (Vertex v = 0; v + 1 < static_cast<Vertex>(n); ++v) e.push_back({v, v + 1});
  return e;
}

inline EdgeVec cycle(int n) {
  EdgeVec e = path(n);
  e.push_back({0, static_cast<Vertex>(n - 1)});
  return e;
}

// Star with center 0 and `leaves` leaves.
inline EdgeVec star(int leaves) {
  EdgeVec e;
  for (Vertex v = 1; v <= static_cast<Vertex>(leaves); ++v) e.push_back({0, v});
  return e;
}

// Complete tripartite K_{3,3,3}: parts {0,1,2}, {3,4,5}, {6,7,8}.
inline EdgeVec moon_moser_9() {
  EdgeVec e;
  for (Vertex u = 0; u < 9; ++u)
    for (Vertex v = u + 1; v < 9; ++v)
      if (u / 3 != v / 3) e.push_back({u, v});
  return e;
}

inline EdgeVec petersen() {
  EdgeVec e;
  for (Vertex v = 0; v < 5; ++v) {
    e.push_back({v, (v + 1) % 5});          // outer cycle
    e.push_back({v, v + 5});                // spokes
    e.push_back({v + 5, (v + 2) % 5 + 5});  // inner pentagram
  }
  return e;
}

// Triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
inline EdgeVec two_triangles_bridge() {
  return {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}};
}

// Seeded Erdos-Renyi edge vector for randomized tests (test-local sampling,
// independent of the library's generator).
inline EdgeVec random_graph(int n, double p, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  EdgeVec e;
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
    for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v)
      if (uni(rng) < p) e.push_back({u, v});
  return e;
}

}  // namespace oracle
