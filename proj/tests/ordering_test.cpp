#include <doctest.h>

#include <cmath>

#include "setminer/hash_vertex_set.hpp"
#include "setminer/hybrid_bitmap_set.hpp"
#include "setminer/ordering.hpp"
#include "setminer/set_graph.hpp"
#include "setminer/sorted_array_set.hpp"
#include "oracles.hpp"

using namespace setminer;

namespace {

template <typename Set = SortedArraySet>
SetGraph<Set> graph_of(const oracle::EdgeVec& edges, VertexId n) {
  EdgeList el;
  el.n = n;
  for (auto [u, v] : edges) el.pairs.emplace_back(u, v);
  return build_graph<Set>(el);
}

// Largest number of later-ranked neighbors over all vertices.
template <typename Set>
std::size_t max_later_neighbors(const SetGraph<Set>& g, const Rank& rank) {
  std::size_t worst = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::size_t later = 0;
    g.neighbors(v).for_each([&](VertexId u) {
      if (rank.rank_of[u] > rank.rank_of[v]) ++later;
    });
    worst = std::max(worst, later);
  }
  return worst;
}

}  // namespace

TEST_CASE("degree order") {
  SUBCASE("star center ranks last") {
    const auto g = graph_of(oracle::star(4), 5);
    const Rank r = degree_order(g);
    CHECK(r.rank_of[0] == 4);
  }
  SUBCASE("regular graph falls back to identity via the id tie-break") {
    const auto g = graph_of(oracle::cycle(6), 6);
    const Rank r = degree_order(g);
    for (VertexId v = 0; v < 6; ++v) CHECK(r.rank_of[v] == v);
  }
  SUBCASE("path P4 ranks degree-1 endpoints before the middle") {
    const auto g = graph_of(oracle::path(4), 4);
    const Rank r = degree_order(g);
    CHECK(r.rank_of[0] == 0);
    CHECK(r.rank_of[3] == 1);
    CHECK(r.rank_of[1] == 2);
    CHECK(r.rank_of[2] == 3);
  }
}

TEST_CASE_TEMPLATE("degeneracy order and cores", Set, SortedArraySet,
                   HybridBitmapSet, HashVertexSet) {
  SUBCASE("complete graph") {
    const auto g = graph_of<Set>(oracle::complete(4), 4);
    const auto [rank, cores] = degeneracy_order(g);
    CHECK(cores.degeneracy == 3);
    CHECK(rank.is_permutation());
  }
  SUBCASE("trees have degeneracy 1") {
    const auto g = graph_of<Set>(oracle::star(5), 6);
    CHECK(degeneracy_order(g).second.degeneracy == 1);
    const auto p = graph_of<Set>(oracle::path(7), 7);
    CHECK(degeneracy_order(p).second.degeneracy == 1);
  }
  SUBCASE("cycle: every core number is 2") {
    const auto g = graph_of<Set>(oracle::cycle(5), 5);
    const auto [rank, cores] = degeneracy_order(g);
    CHECK(cores.degeneracy == 2);
    for (VertexId v = 0; v < 5; ++v) CHECK(cores.core[v] == 2);
  }
}

TEST_CASE("core subgraphs") {
  SUBCASE("K4 at k = 3 keeps everything") {
    const auto g = graph_of(oracle::complete(4), 4);
    CHECK(core_subgraph(g, 3).to_sorted_vector() ==
          std::vector<VertexId>{0, 1, 2, 3});
  }
  SUBCASE("tree at k = 2 is empty") {
    const auto g = graph_of(oracle::star(4), 5);
    CHECK(core_subgraph(g, 2).empty());
  }
  SUBCASE("two triangles with a bridge: 2-core keeps the six triangle vertices") {
    const auto g = graph_of(oracle::two_triangles_bridge(), 6);
    CHECK(core_subgraph(g, 2).to_sorted_vector() ==
          std::vector<VertexId>{0, 1, 2, 3, 4, 5});
    CHECK(core_subgraph(g, 3).empty());
  }
  SUBCASE("nonempty exactly up to the degeneracy") {
    const auto edges = oracle::random_graph(50, 0.15, 31);
    const auto g = graph_of(edges, 50);
    const auto d = degeneracy_order(g).second.degeneracy;
    for (std::uint32_t k = 0; k <= d + 2; ++k)
      CHECK(core_subgraph(g, k).empty() == (k > d));
  }
}

TEST_CASE("approximate degeneracy order") {
  SUBCASE("edgeless graph: one batch, identity") {
    EdgeList el;
    el.n = 6;
    const auto g = build_graph<SortedArraySet>(el);
    const Rank r = approx_degeneracy_order(g, 0.0);
    CHECK(r.batch_count == 1);
    for (VertexId v = 0; v < 6; ++v) CHECK(r.rank_of[v] == v);
  }
  SUBCASE("star S4 with eps = 0: leaves first, center second") {
    const auto g = graph_of(oracle::star(4), 5);
    const Rank r = approx_degeneracy_order(g, 0.0);
    CHECK(r.batch_count == 2);
    CHECK(r.batch_offsets == std::vector<std::uint32_t>{0, 4, 5});
    CHECK(r.rank_of[0] == 4);
    for (VertexId leaf = 1; leaf <= 4; ++leaf) CHECK(r.rank_of[leaf] == leaf - 1);
  }
  SUBCASE("path P4 with eps = 0.1: endpoints then middle") {
    const auto g = graph_of(oracle::path(4), 4);
    const Rank r = approx_degeneracy_order(g, 0.1);
    CHECK(r.batch_count == 2);
    CHECK(r.rank_of == std::vector<std::uint32_t>{0, 2, 3, 1});
  }
  SUBCASE("negative epsilon is rejected") {
    const auto g = graph_of(oracle::path(3), 3);
    CHECK_THROWS_AS(approx_degeneracy_order(g, -0.5), std::invalid_argument);
  }
  SUBCASE("batch boundaries strictly increase") {
    const auto g = graph_of(oracle::random_graph(80, 0.1, 12), 80);
    const Rank r = approx_degeneracy_order(g, 0.1);
    for (std::size_t i = 1; i < r.batch_offsets.size(); ++i)
      CHECK(r.batch_offsets[i] > r.batch_offsets[i - 1]);
    CHECK(r.batch_offsets.back() == 80);
    CHECK(r.batch_offsets.size() == r.batch_count + 1);
  }
}

TEST_CASE("ordering quality bounds") {
  for (std::uint32_t seed = 0; seed < 20; ++seed) {
    const int n = 20 + static_cast<int>(seed) * 7;
    const double p = seed % 2 ? 0.08 : 0.25;
    const auto g = graph_of(oracle::random_graph(n, p, 1000 + seed), n);
    const auto [dgr, cores] = degeneracy_order(g);

    // exact order achieves the degeneracy exactly
    REQUIRE(max_later_neighbors(g, dgr) == cores.degeneracy);

    for (double eps : {0.01, 0.1, 0.5}) {
      const Rank adg = approx_degeneracy_order(g, eps);
      REQUIRE(adg.is_permutation());
      const auto bound = static_cast<std::size_t>(
          std::ceil((2.0 + 2.0 * eps) * cores.degeneracy));
      REQUIRE(max_later_neighbors(g, adg) <= bound);
    }
  }
}

TEST_CASE("orders are permutations and deterministic") {
  const auto g = graph_of(oracle::random_graph(60, 0.12, 8), 60);
  const Rank deg1 = degree_order(g);
  const Rank deg2 = degree_order(g);
  const Rank dgr1 = degeneracy_order(g).first;
  const Rank dgr2 = degeneracy_order(g).first;
  const Rank adg1 = approx_degeneracy_order(g, 0.1);
  const Rank adg2 = approx_degeneracy_order(g, 0.1);
  CHECK(deg1.is_permutation());
  CHECK(dgr1.is_permutation());
  CHECK(adg1.is_permutation());
  CHECK(deg1.rank_of == deg2.rank_of);
  CHECK(dgr1.rank_of == dgr2.rank_of);
  CHECK(adg1.rank_of == adg2.rank_of);
}

TEST_CASE("rank agreement across set representations") {
  const auto edges = oracle::random_graph(45, 0.2, 64);
  const auto gs = graph_of<SortedArraySet>(edges, 45);
  const auto gh = graph_of<HybridBitmapSet>(edges, 45);
  const auto gt = graph_of<HashVertexSet>(edges, 45);
  CHECK(degree_order(gs).rank_of == degree_order(gh).rank_of);
  CHECK(degree_order(gs).rank_of == degree_order(gt).rank_of);
  CHECK(degeneracy_order(gs).first.rank_of == degeneracy_order(gh).first.rank_of);
  CHECK(degeneracy_order(gs).first.rank_of == degeneracy_order(gt).first.rank_of);
  CHECK(approx_degeneracy_order(gs, 0.1).rank_of ==
        approx_degeneracy_order(gh, 0.1).rank_of);
  CHECK(approx_degeneracy_order(gs, 0.1).rank_of ==
        approx_degeneracy_order(gt, 0.1).rank_of);
}
