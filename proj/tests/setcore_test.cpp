#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "setminer/hash_vertex_set.hpp"
#include "setminer/hybrid_bitmap_set.hpp"
#include "setminer/sorted_array_set.hpp"
#include "setminer/vertex_set.hpp"

using namespace setminer;

static_assert(VertexSet<SortedArraySet>);
static_assert(VertexSet<HybridBitmapSet>);
static_assert(VertexSet<HashVertexSet>);

namespace {

std::vector<VertexId> multiples_below(VertexId step, VertexId bound) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < bound; v += step) out.push_back(v);
  return out;
}

template <typename Set>
Set make(const std::vector<VertexId>& sorted) {
  return Set::from_sorted(sorted);
}

// Reference model for differential testing.
struct ModelSet {
  std::set<VertexId> s;

  static ModelSet from(const std::vector<VertexId>& v) {
    return {std::set<VertexId>(v.begin(), v.end())};
  }
  ModelSet intersect(const ModelSet& o) const {
    ModelSet out;
    for (VertexId v : s)
      if (o.s.count(v)) out.s.insert(v);
    return out;
  }
  ModelSet union_with(const ModelSet& o) const {
    ModelSet out = *this;
    out.s.insert(o.s.begin(), o.s.end());
    return out;
  }
  ModelSet diff(const ModelSet& o) const {
    ModelSet out;
    for (VertexId v : s)
      if (!o.s.count(v)) out.s.insert(v);
    return out;
  }
  std::vector<VertexId> sorted() const { return {s.begin(), s.end()}; }
};

}  // namespace

TEST_CASE_TEMPLATE("binary operation examples", Set, SortedArraySet,
                   HybridBitmapSet, HashVertexSet) {
  const Set a = Set::of({1, 2, 3});
  const Set b = Set::of({2, 3, 4});

  CHECK(a.intersect(b).to_sorted_vector() == std::vector<VertexId>{2, 3});
  CHECK(Set{}.intersect(Set::of({2, 3})).to_sorted_vector().empty());
  CHECK(a.intersect_count(b) == 2);
  CHECK(a.intersect_count(a) == a.cardinality());
  CHECK(Set::of({1, 2}).union_with(Set::of({2, 3})).to_sorted_vector() ==
        std::vector<VertexId>{1, 2, 3});
  CHECK(a.diff(Set::of({2})).to_sorted_vector() == std::vector<VertexId>{1, 3});

  // evens and multiples of 3 below 1000 meet at the 167 multiples of 6
  const Set evens = make<Set>(multiples_below(2, 1000));
  const Set threes = make<Set>(multiples_below(3, 1000));
  CHECK(evens.intersect(threes).cardinality() == 167);
  CHECK(evens.intersect_count(threes) == 167);
  CHECK(evens.intersect(threes).to_sorted_vector() == multiples_below(6, 1000));
}

TEST_CASE_TEMPLATE("non-mutating ops leave inputs untouched", Set,
                   SortedArraySet, HybridBitmapSet, HashVertexSet) {
  const Set a = Set::of({1, 5, 9, 200});
  const Set b = Set::of({5, 200, 300});
  const auto snap_a = a.to_sorted_vector();
  const auto snap_b = b.to_sorted_vector();
  (void)a.intersect(b);
  (void)a.union_with(b);
  (void)a.diff(b);
  (void)a.intersect_count(b);
  (void)a.contains(5);
  CHECK(a.to_sorted_vector() == snap_a);
  CHECK(b.to_sorted_vector() == snap_b);
}

TEST_CASE_TEMPLATE("mutation examples", Set, SortedArraySet, HybridBitmapSet,
                   HashVertexSet) {
  Set a = Set::of({1, 2});
  a.add(3);
  CHECK(a.to_sorted_vector() == std::vector<VertexId>{1, 2, 3});
  a.remove(9);  // absent: no-op
  CHECK(a.to_sorted_vector() == std::vector<VertexId>{1, 2, 3});
  a.remove(2);
  CHECK(a.to_sorted_vector() == std::vector<VertexId>{1, 3});

  Set m4 = make<Set>(multiples_below(4, 100));
  m4.diff_inplace(make<Set>(multiples_below(8, 100)));
  CHECK(m4.cardinality() == 12);
  CHECK(m4.to_sorted_vector() ==
        std::vector<VertexId>{4, 12, 20, 28, 36, 44, 52, 60, 68, 76, 84, 92});

  Set u = Set::of({1, 2});
  u.union_inplace(Set::of({2, 9}));
  CHECK(u.to_sorted_vector() == std::vector<VertexId>{1, 2, 9});
  u.intersect_inplace(Set::of({2, 9, 10}));
  CHECK(u.to_sorted_vector() == std::vector<VertexId>{2, 9});
}

TEST_CASE_TEMPLATE("membership and construction", Set, SortedArraySet,
                   HybridBitmapSet, HashVertexSet) {
  CHECK(Set::of({5, 7}).contains(7));
  CHECK_FALSE(Set{}.contains(0));

  const std::vector<VertexId> dupes{3, 1, 3, 2};
  CHECK(Set::from_values(dupes).to_sorted_vector() ==
        std::vector<VertexId>{1, 2, 3});
  CHECK(Set::range(0).cardinality() == 0);
  CHECK(Set::range(5).to_sorted_vector() ==
        std::vector<VertexId>{0, 1, 2, 3, 4});
  CHECK(Set::single(7).to_sorted_vector() == std::vector<VertexId>{7});

  // clone is deep
  Set original = Set::of({1, 2});
  Set copy = original.clone();
  copy.add(99);
  CHECK(original.to_sorted_vector() == std::vector<VertexId>{1, 2});
  CHECK(copy.contains(99));
}

TEST_CASE_TEMPLATE("iteration yields each element exactly once", Set,
                   SortedArraySet, HybridBitmapSet, HashVertexSet) {
  const Set s = Set::of({0, 7, 65535, 65536, 100000});
  std::vector<VertexId> seen;
  for (VertexId v : s) seen.push_back(v);
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<VertexId>{0, 7, 65535, 65536, 100000});
  CHECK(seen.size() == s.cardinality());

  std::vector<VertexId> via_for_each;
  s.for_each([&](VertexId v) { via_for_each.push_back(v); });
  std::sort(via_for_each.begin(), via_for_each.end());
  CHECK(via_for_each == seen);
}

TEST_CASE("hybrid chunking: range(2^17) spans exactly 2 chunks") {
  const auto s = HybridBitmapSet::range(1u << 17);
  CHECK(s.cardinality() == 131072);
  CHECK(s.chunk_count() == 2);
  CHECK(s.internally_consistent());
  // both chunks are above the array threshold, so they are bitmaps
  CHECK(s.heap_bytes() >= 2 * 8192);
}

TEST_CASE("hybrid container kind tracks the 4096 threshold") {
  auto s = HybridBitmapSet::range(4096);  // exactly at the array limit
  CHECK(s.chunk_count() == 1);
  // internally_consistent() rejects any container whose kind disagrees with
  // its cardinality, so it proves the flips below actually happen
  CHECK(s.internally_consistent());
  s.add(4096);  // 4097 elements: must flip to a bitmap
  CHECK(s.internally_consistent());
  CHECK(s.contains(4096));
  s.remove(4096);  // back to 4096: must flip back to an array
  CHECK(s.internally_consistent());
  CHECK(s == HybridBitmapSet::range(4096));
  CHECK(s.to_sorted_vector() == HybridBitmapSet::range(4096).to_sorted_vector());
}

TEST_CASE("hybrid invariant holds through a long random mutation sequence") {
  std::mt19937 rng(20260810);
  std::uniform_int_distribution<VertexId> value(0, 3 * 65536);
  std::uniform_int_distribution<int> op(0, 5);

  HybridBitmapSet s;
  std::set<VertexId> model;
  for (int step = 0; step < 12000; ++step) {
    switch (op(rng)) {
      case 0:
      case 1: {  // biased toward growth so bitmap containers appear
        VertexId v = value(rng);
        s.add(v);
        model.insert(v);
        break;
      }
      case 2: {
        VertexId v = value(rng);
        s.remove(v);
        model.erase(v);
        break;
      }
      case 3: {  // bulk add of a small run
        VertexId base = value(rng);
        std::vector<VertexId> run;
        for (VertexId d = 0; d < 64; ++d) run.push_back(base + d);
        s.union_inplace(HybridBitmapSet::from_sorted(run));
        model.insert(run.begin(), run.end());
        break;
      }
      case 4: {  // bulk remove
        VertexId base = value(rng);
        std::vector<VertexId> run;
        for (VertexId d = 0; d < 48; ++d) run.push_back(base + d);
        s.diff_inplace(HybridBitmapSet::from_sorted(run));
        for (VertexId v : run) model.erase(v);
        break;
      }
      case 5: {  // occasionally intersect with a wide window
        if (step % 97 != 0) {
          VertexId v = value(rng);
          s.add(v);
          model.insert(v);
          break;
        }
        VertexId base = value(rng) / 2;
        std::vector<VertexId> window;
        for (VertexId v = base; v < base + 80000; v += 1) window.push_back(v);
        s.intersect_inplace(HybridBitmapSet::from_sorted(window));
        for (auto it = model.begin(); it != model.end();) {
          if (*it < base || *it >= base + 80000)
            it = model.erase(it);
          else
            ++it;
        }
        break;
      }
    }
    REQUIRE(s.internally_consistent());
    REQUIRE(s.cardinality() == model.size());
  }
  CHECK(s.to_sorted_vector() ==
        std::vector<VertexId>(model.begin(), model.end()));
}

TEST_CASE_TEMPLATE("differential: exhaustive pairs over a tiny universe", Set,
                   SortedArraySet, HybridBitmapSet, HashVertexSet) {
  constexpr int kUniverse = 5;
  for (unsigned ma = 0; ma < (1u << kUniverse); ++ma) {
    for (unsigned mb = 0; mb < (1u << kUniverse); ++mb) {
      std::vector<VertexId> va, vb;
      for (VertexId v = 0; v < kUniverse; ++v) {
        if ((ma >> v) & 1) va.push_back(v);
        if ((mb >> v) & 1) vb.push_back(v);
      }
      const Set a = make<Set>(va);
      const Set b = make<Set>(vb);
      const ModelSet xa = ModelSet::from(va);
      const ModelSet xb = ModelSet::from(vb);
      REQUIRE(a.intersect(b).to_sorted_vector() == xa.intersect(xb).sorted());
      REQUIRE(a.union_with(b).to_sorted_vector() == xa.union_with(xb).sorted());
      REQUIRE(a.diff(b).to_sorted_vector() == xa.diff(xb).sorted());
      REQUIRE(a.intersect_count(b) == xa.intersect(xb).s.size());
    }
  }
}

TEST_CASE_TEMPLATE("differential + algebraic laws on random sets", Set,
                   SortedArraySet, HybridBitmapSet, HashVertexSet) {
  std::mt19937 rng(99);
  for (int round = 0; round < 300; ++round) {
    const VertexId universe = round % 3 == 0   ? 64
                              : round % 3 == 1 ? 1000
                                               : 150000;
    std::uniform_int_distribution<VertexId> value(0, universe - 1);
    std::uniform_int_distribution<int> size(0, 120);
    std::vector<VertexId> va, vb;
    for (int i = size(rng); i > 0; --i) va.push_back(value(rng));
    for (int i = size(rng); i > 0; --i) vb.push_back(value(rng));

    const Set a = Set::from_values(va);
    const Set b = Set::from_values(vb);
    const ModelSet xa = ModelSet::from(va);
    const ModelSet xb = ModelSet::from(vb);

    REQUIRE(a.intersect(b).to_sorted_vector() == xa.intersect(xb).sorted());
    REQUIRE(a.union_with(b).to_sorted_vector() == xa.union_with(xb).sorted());
    REQUIRE(a.diff(b).to_sorted_vector() == xa.diff(xb).sorted());

    // commutativity
    REQUIRE(a.intersect(b).to_sorted_vector() == b.intersect(a).to_sorted_vector());
    REQUIRE(a.union_with(b).to_sorted_vector() == b.union_with(a).to_sorted_vector());
    // A \ B == A \ (A n B)
    REQUIRE(a.diff(b).to_sorted_vector() ==
            a.diff(a.intersect(b)).to_sorted_vector());
    // |A n B| + |A u B| == |A| + |B|
    REQUIRE(a.intersect_count(b) + a.union_with(b).cardinality() ==
            a.cardinality() + b.cardinality());
    // count variant agrees with materialized intersection
    REQUIRE(a.intersect_count(b) == a.intersect(b).cardinality());
  }
}

TEST_CASE("cross-representation equivalence on random workloads") {
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    std::uniform_int_distribution<VertexId> value(0, 200000);
    std::uniform_int_distribution<int> size(0, 200);
    std::vector<VertexId> va, vb;
    for (int i = size(rng); i > 0; --i) va.push_back(value(rng));
    for (int i = size(rng); i > 0; --i) vb.push_back(value(rng));

    const auto sa = SortedArraySet::from_values(va);
    const auto sb = SortedArraySet::from_values(vb);
    const auto ha = HybridBitmapSet::from_values(va);
    const auto hb = HybridBitmapSet::from_values(vb);
    const auto ta = HashVertexSet::from_values(va);
    const auto tb = HashVertexSet::from_values(vb);

    const auto expect_inter = sa.intersect(sb).to_sorted_vector();
    REQUIRE(ha.intersect(hb).to_sorted_vector() == expect_inter);
    REQUIRE(ta.intersect(tb).to_sorted_vector() == expect_inter);

    const auto expect_union = sa.union_with(sb).to_sorted_vector();
    REQUIRE(ha.union_with(hb).to_sorted_vector() == expect_union);
    REQUIRE(ta.union_with(tb).to_sorted_vector() == expect_union);

    const auto expect_diff = sa.diff(sb).to_sorted_vector();
    REQUIRE(ha.diff(hb).to_sorted_vector() == expect_diff);
    REQUIRE(ta.diff(tb).to_sorted_vector() == expect_diff);

    REQUIRE(ha.internally_consistent());
    REQUIRE(ha.intersect(hb).internally_consistent());
    REQUIRE(ha.union_with(hb).internally_consistent());
    REQUIRE(ha.diff(hb).internally_consistent());
  }
}

TEST_CASE("sorted set exercises both merge and galloping intersections") {
  // |A| / |B| far outside [1/32, 32] takes the galloping path
  std::vector<VertexId> big;
  for (VertexId v = 0; v < 10000; v += 2) big.push_back(v);
  const auto large = SortedArraySet::from_sorted(big);
  const auto small = SortedArraySet::of({3, 4, 5000, 5001, 9998});
  CHECK(large.intersect(small).to_sorted_vector() ==
        std::vector<VertexId>{4, 5000, 9998});
  CHECK(large.intersect_count(small) == 3);
  // near-equal sizes take the merge path
  const auto threes = SortedArraySet::from_values(multiples_below(3, 10000));
  CHECK(large.intersect_count(threes) == large.intersect(threes).cardinality());
}
