#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "setminer/edge_list.hpp"
#include "setminer/rng.hpp"
#include "setminer/types.hpp"

namespace setminer {

// Uniform random graph: every unordered pair is an edge independently with
// probability p. Two sampling schemes, both deterministic per seed:
// per-pair Bernoulli draws up to n = 10^4 vertices, geometric gap skipping
// above (one log per edge instead of one draw per pair).
inline EdgeList generate_erdos_renyi(VertexId n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0, 1]");
  EdgeList edges;
  edges.n = n;
  if (n < 2 || p == 0.0) return edges;
  Rng rng(seed);

  if (p == 1.0) {
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) edges.pairs.emplace_back(u, v);
    return edges;
  }

  if (n <= 10'000) {
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (rng.next_double() < p) edges.pairs.emplace_back(u, v);
    return edges;
  }

  // Skip ahead by geometrically distributed gaps over the linearized pair
  // index space.
  const double log1mp = std::log1p(-p);
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::uint64_t idx = 0;
  while (true) {
    const double u01 = rng.next_double();
    const std::uint64_t gap =
        static_cast<std::uint64_t>(std::floor(std::log1p(-u01) / log1mp));
    if (gap > total - 1 || idx > total - 1 - gap) break;
    idx += gap;
    // Invert idx -> (u, v) with u < v over the row-major upper triangle.
    // Counting from the last pair, row lengths run 1, 2, ..., n-1, so the
    // reversed index falls in triangle row k = floor((sqrt(8i+1)-1)/2);
    // the float sqrt is corrected by +-1 steps.
    const std::uint64_t rev = total - 1 - idx;
    std::uint64_t k = static_cast<std::uint64_t>(
        (std::sqrt(8.0 * static_cast<double>(rev) + 1.0) - 1.0) / 2.0);
    while (k > 0 && k * (k + 1) / 2 > rev) --k;
    while ((k + 1) * (k + 2) / 2 <= rev) ++k;
    const std::uint64_t row = n - 2 - k;
    const std::uint64_t col = n - 1 - (rev - k * (k + 1) / 2);
    edges.pairs.emplace_back(static_cast<VertexId>(row), static_cast<VertexId>(col));
    ++idx;
  }
  return edges;
}

// Kronecker-style power-law generator with the standard Graph500 initiator
// (0.57, 0.19, 0.19, 0.05). Samples edge_factor * 2^scale directed pairs by
// recursive quadrant selection; self-loops and duplicates survive here and
// are dropped by graph construction.
inline EdgeList generate_powerlaw(std::uint32_t scale, std::uint32_t edge_factor,
                                  std::uint64_t seed) {
  if (scale < 1) throw std::invalid_argument("scale must be >= 1");
  if (scale > 31) throw std::invalid_argument("scale must be <= 31");
  constexpr double kA = 0.57, kB = 0.19, kC = 0.19;

  EdgeList edges;
  edges.n = VertexId{1} << scale;
  const std::uint64_t samples = static_cast<std::uint64_t>(edge_factor) * edges.n;
  edges.pairs.reserve(samples);
  Rng rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    VertexId u = 0, v = 0;
    for (std::uint32_t bit = 0; bit < scale; ++bit) {
      const double r = rng.next_double();
      u <<= 1;
      v <<= 1;
      if (r < kA) {
        // upper-left quadrant: both bits 0
      } else if (r < kA + kB) {
        v |= 1;
      } else if (r < kA + kB + kC) {
        u |= 1;
      } else {
        u |= 1;
        v |= 1;
      }
    }
    edges.pairs.emplace_back(u, v);
  }
  return edges;
}

}  // namespace setminer
