#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

#include "setminer/types.hpp"

namespace setminer {

// Chunked bitmap set in the roaring style. Elements are split on the high
// 16 bits; each chunk stores its low 16-bit parts either as a sorted
// uint16 array (<= kArrayMax elements) or as a dense 65536-bit bitmap
// (> kArrayMax). Chunks re-normalize their kind after every mutation, so the
// representation is canonical: equal contents compare equal member-wise.
// Iteration order is globally ascending.
//
// heap_bytes accounting rule: sizeof(Chunk) per chunk record, plus 2 bytes
// per stored id in array chunks, plus 8192 bytes per bitmap chunk.
class HybridBitmapSet {
 public:
  static constexpr std::uint32_t kChunkBits = 16;
  static constexpr std::uint32_t kChunkSpan = 1u << kChunkBits;
  static constexpr std::size_t kWords = kChunkSpan / 64;
  // Array/bitmap break-even point: 4096 * 2 bytes == 8192 bytes of bitmap.
  static constexpr std::size_t kArrayMax = 4096;

  HybridBitmapSet() = default;

  static HybridBitmapSet from_sorted(std::span<const VertexId> sorted) {
    assert(std::is_sorted(sorted.begin(), sorted.end()) &&
           std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    HybridBitmapSet s;
    std::size_t i = 0;
    while (i < sorted.size()) {
      const std::uint32_t key = sorted[i] >> kChunkBits;
      std::size_t j = i;
      while (j < sorted.size() && (sorted[j] >> kChunkBits) == key) ++j;
      Chunk c;
      c.key = key;
      c.count = static_cast<std::uint32_t>(j - i);
      if (c.count > kArrayMax) {
        c.dense = true;
        c.bits.assign(kWords, 0);
        for (std::size_t k = i; k < j; ++k) set_bit(c.bits, low16(sorted[k]));
      } else {
        c.values.reserve(c.count);
        for (std::size_t k = i; k < j; ++k) c.values.push_back(low16(sorted[k]));
      }
      s.chunks_.push_back(std::move(c));
      i = j;
    }
    s.size_ = sorted.size();
    return s;
  }

  static HybridBitmapSet from_values(std::span<const VertexId> values) {
    std::vector<VertexId> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return from_sorted(v);
  }

  static HybridBitmapSet range(VertexId bound) {
    HybridBitmapSet s;
    for (std::uint32_t base = 0; base < bound; base += kChunkSpan) {
      const std::uint32_t in_chunk = std::min<std::uint32_t>(bound - base, kChunkSpan);
      Chunk c;
      c.key = base >> kChunkBits;
      c.count = in_chunk;
      if (in_chunk > kArrayMax) {
        c.dense = true;
        c.bits.assign(kWords, 0);
        for (std::uint32_t w = 0; w < in_chunk / 64; ++w) c.bits[w] = ~0ull;
        if (in_chunk % 64) c.bits[in_chunk / 64] = (1ull << (in_chunk % 64)) - 1;
      } else {
        c.values.resize(in_chunk);
        for (std::uint32_t k = 0; k < in_chunk; ++k)
          c.values[k] = static_cast<std::uint16_t>(k);
      }
      s.chunks_.push_back(std::move(c));
    }
    s.size_ = bound;
    return s;
  }

  static HybridBitmapSet single(VertexId v) {
    HybridBitmapSet s;
    s.add(v);
    return s;
  }

  static HybridBitmapSet of(std::initializer_list<VertexId> values) {
    return from_values(std::span<const VertexId>(values.begin(), values.size()));
  }

  HybridBitmapSet clone() const { return *this; }

  HybridBitmapSet intersect(const HybridBitmapSet& other) const {
    HybridBitmapSet out;
    auto ia = chunks_.begin(), ib = other.chunks_.begin();
    while (ia != chunks_.end() && ib != other.chunks_.end()) {
      if (ia->key < ib->key) {
        ++ia;
      } else if (ib->key < ia->key) {
        ++ib;
      } else {
        Chunk c = chunk_intersect(*ia, *ib);
        if (c.count) {
          out.size_ += c.count;
          out.chunks_.push_back(std::move(c));
        }
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  std::size_t intersect_count(const HybridBitmapSet& other) const {
    std::size_t count = 0;
    auto ia = chunks_.begin(), ib = other.chunks_.begin();
    while (ia != chunks_.end() && ib != other.chunks_.end()) {
      if (ia->key < ib->key) {
        ++ia;
      } else if (ib->key < ia->key) {
        ++ib;
      } else {
        count += chunk_intersect_count(*ia, *ib);
        ++ia;
        ++ib;
      }
    }
    return count;
  }

  HybridBitmapSet union_with(const HybridBitmapSet& other) const {
    HybridBitmapSet out;
    auto ia = chunks_.begin(), ib = other.chunks_.begin();
    while (ia != chunks_.end() || ib != other.chunks_.end()) {
      Chunk c;
      if (ib == other.chunks_.end() || (ia != chunks_.end() && ia->key < ib->key)) {
        c = *ia++;
      } else if (ia == chunks_.end() || ib->key < ia->key) {
        c = *ib++;
      } else {
        c = chunk_union(*ia, *ib);
        ++ia;
        ++ib;
      }
      out.size_ += c.count;
      out.chunks_.push_back(std::move(c));
    }
    return out;
  }

  HybridBitmapSet diff(const HybridBitmapSet& other) const {
    HybridBitmapSet out;
    auto ia = chunks_.begin(), ib = other.chunks_.begin();
    while (ia != chunks_.end()) {
      while (ib != other.chunks_.end() && ib->key < ia->key) ++ib;
      if (ib != other.chunks_.end() && ib->key == ia->key) {
        Chunk c = chunk_diff(*ia, *ib);
        if (c.count) {
          out.size_ += c.count;
          out.chunks_.push_back(std::move(c));
        }
      } else {
        out.size_ += ia->count;
        out.chunks_.push_back(*ia);
      }
      ++ia;
    }
    return out;
  }

  void intersect_inplace(const HybridBitmapSet& other) { *this = intersect(other); }
  void union_inplace(const HybridBitmapSet& other) { *this = union_with(other); }
  void diff_inplace(const HybridBitmapSet& other) { *this = diff(other); }

  void add(VertexId v) {
    const std::uint32_t key = v >> kChunkBits;
    const std::uint16_t low = low16(v);
    auto it = std::lower_bound(chunks_.begin(), chunks_.end(), key,
                               [](const Chunk& c, std::uint32_t k) { return c.key < k; });
    if (it == chunks_.end() || it->key != key) {
      Chunk c;
      c.key = key;
      c.count = 1;
      c.values.push_back(low);
      chunks_.insert(it, std::move(c));
      ++size_;
      return;
    }
    if (it->dense) {
      if (!test_bit(it->bits, low)) {
        set_bit(it->bits, low);
        ++it->count;
        ++size_;
      }
    } else {
      auto pos = std::lower_bound(it->values.begin(), it->values.end(), low);
      if (pos == it->values.end() || *pos != low) {
        it->values.insert(pos, low);
        ++it->count;
        ++size_;
        if (it->count > kArrayMax) to_dense(*it);
      }
    }
  }

  void remove(VertexId v) {
    const std::uint32_t key = v >> kChunkBits;
    const std::uint16_t low = low16(v);
    auto it = std::lower_bound(chunks_.begin(), chunks_.end(), key,
                               [](const Chunk& c, std::uint32_t k) { return c.key < k; });
    if (it == chunks_.end() || it->key != key) return;
    if (it->dense) {
      if (test_bit(it->bits, low)) {
        clear_bit(it->bits, low);
        --it->count;
        --size_;
        if (it->count <= kArrayMax) to_sparse(*it);
      }
    } else {
      auto pos = std::lower_bound(it->values.begin(), it->values.end(), low);
      if (pos != it->values.end() && *pos == low) {
        it->values.erase(pos);
        --it->count;
        --size_;
        if (it->count == 0) chunks_.erase(it);
      }
    }
  }

  bool contains(VertexId v) const {
    const std::uint32_t key = v >> kChunkBits;
    auto it = std::lower_bound(chunks_.begin(), chunks_.end(), key,
                               [](const Chunk& c, std::uint32_t k) { return c.key < k; });
    if (it == chunks_.end() || it->key != key) return false;
    const std::uint16_t low = low16(v);
    if (it->dense) return test_bit(it->bits, low);
    return std::binary_search(it->values.begin(), it->values.end(), low);
  }

  std::size_t cardinality() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::size_t chunk_count() const { return chunks_.size(); }

  std::vector<VertexId> to_sorted_vector() const {
    std::vector<VertexId> out;
    out.reserve(size_);
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
  }

  std::size_t heap_bytes() const {
    std::size_t bytes = chunks_.size() * sizeof(Chunk);
    for (const Chunk& c : chunks_)
      bytes += c.dense ? kWords * sizeof(std::uint64_t)
                       : c.values.size() * sizeof(std::uint16_t);
    return bytes;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (const Chunk& c : chunks_) {
      const VertexId base = c.key << kChunkBits;
      if (c.dense) {
        for (std::size_t w = 0; w < kWords; ++w) {
          std::uint64_t word = c.bits[w];
          while (word) {
            f(base + static_cast<VertexId>(w * 64 + std::countr_zero(word)));
            word &= word - 1;
          }
        }
      } else {
        for (std::uint16_t low : c.values) f(base + low);
      }
    }
  }

  // Checks the structural invariants: ascending chunk keys, exact per-chunk
  // counts, sorted array payloads, and container kind matching the
  // cardinality threshold. Used by the differential tests.
  bool internally_consistent() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < chunks_.size(); ++i) {
      const Chunk& c = chunks_[i];
      if (i > 0 && chunks_[i - 1].key >= c.key) return false;
      if (c.count == 0) return false;
      if (c.dense != (c.count > kArrayMax)) return false;
      if (c.dense) {
        if (c.bits.size() != kWords || !c.values.empty()) return false;
        std::size_t pop = 0;
        for (std::uint64_t w : c.bits) pop += std::popcount(w);
        if (pop != c.count) return false;
      } else {
        if (!c.bits.empty() || c.values.size() != c.count) return false;
        if (!std::is_sorted(c.values.begin(), c.values.end()) ||
            std::adjacent_find(c.values.begin(), c.values.end()) != c.values.end())
          return false;
      }
      total += c.count;
    }
    return total == size_;
  }

  friend bool operator==(const HybridBitmapSet& a, const HybridBitmapSet& b) {
    return a.size_ == b.size_ && a.chunks_ == b.chunks_;
  }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;

    const_iterator() = default;

    VertexId operator*() const {
      const Chunk& c = set_->chunks_[ci_];
      const std::uint16_t low =
          c.dense ? static_cast<std::uint16_t>(pos_) : c.values[pos_];
      return (c.key << kChunkBits) + low;
    }

    const_iterator& operator++() {
      const Chunk& c = set_->chunks_[ci_];
      if (c.dense) {
        const int next = find_bit_ge(c.bits, pos_ + 1);
        if (next >= 0) {
          pos_ = static_cast<std::uint32_t>(next);
          return *this;
        }
      } else if (pos_ + 1 < c.values.size()) {
        ++pos_;
        return *this;
      }
      ++ci_;
      enter_chunk();
      return *this;
    }

    const_iterator operator++(int) {
      const_iterator tmp = *this;
      ++*this;
      return tmp;
    }

    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.ci_ == b.ci_ && a.pos_ == b.pos_;
    }

   private:
    friend class HybridBitmapSet;
    const_iterator(const HybridBitmapSet* set, std::size_t ci) : set_(set), ci_(ci) {
      enter_chunk();
    }

    void enter_chunk() {
      pos_ = 0;
      if (ci_ >= set_->chunks_.size()) return;
      const Chunk& c = set_->chunks_[ci_];
      if (c.dense) pos_ = static_cast<std::uint32_t>(find_bit_ge(c.bits, 0));
    }

    const HybridBitmapSet* set_ = nullptr;
    std::size_t ci_ = 0;
    std::uint32_t pos_ = 0;
  };

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const { return const_iterator(this, chunks_.size()); }

 private:
  struct Chunk {
    std::uint32_t key = 0;
    std::uint32_t count = 0;
    bool dense = false;
    std::vector<std::uint16_t> values;
    std::vector<std::uint64_t> bits;

    friend bool operator==(const Chunk&, const Chunk&) = default;
  };

  static std::uint16_t low16(VertexId v) {
    return static_cast<std::uint16_t>(v & (kChunkSpan - 1));
  }
  static bool test_bit(const std::vector<std::uint64_t>& bits, std::uint16_t i) {
    return (bits[i >> 6] >> (i & 63)) & 1;
  }
  static void set_bit(std::vector<std::uint64_t>& bits, std::uint16_t i) {
    bits[i >> 6] |= 1ull << (i & 63);
  }
  static void clear_bit(std::vector<std::uint64_t>& bits, std::uint16_t i) {
    bits[i >> 6] &= ~(1ull << (i & 63));
  }

  static int find_bit_ge(const std::vector<std::uint64_t>& bits, std::uint32_t from) {
    std::size_t w = from >> 6;
    if (w >= kWords) return -1;
    std::uint64_t word = bits[w] & (~0ull << (from & 63));
    while (true) {
      if (word) return static_cast<int>(w * 64 + std::countr_zero(word));
      if (++w == kWords) return -1;
      word = bits[w];
    }
  }

  static void to_dense(Chunk& c) {
    c.bits.assign(kWords, 0);
    for (std::uint16_t v : c.values) set_bit(c.bits, v);
    c.values.clear();
    c.values.shrink_to_fit();
    c.dense = true;
  }

  static void to_sparse(Chunk& c) {
    c.values.clear();
    c.values.reserve(c.count);
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t word = c.bits[w];
      while (word) {
        c.values.push_back(static_cast<std::uint16_t>(w * 64 + std::countr_zero(word)));
        word &= word - 1;
      }
    }
    c.bits.clear();
    c.bits.shrink_to_fit();
    c.dense = false;
  }

  // Applies the kind rule after a bulk chunk operation.
  static void normalize(Chunk& c) {
    if (c.dense && c.count <= kArrayMax)
      to_sparse(c);
    else if (!c.dense && c.count > kArrayMax)
      to_dense(c);
  }

  static Chunk chunk_intersect(const Chunk& a, const Chunk& b) {
    Chunk out;
    out.key = a.key;
    if (a.dense && b.dense) {
      out.bits.resize(kWords);
      std::size_t pop = 0;
      for (std::size_t w = 0; w < kWords; ++w) {
        out.bits[w] = a.bits[w] & b.bits[w];
        pop += std::popcount(out.bits[w]);
      }
      out.count = static_cast<std::uint32_t>(pop);
      out.dense = true;
      normalize(out);
    } else if (!a.dense && !b.dense) {
      std::set_intersection(a.values.begin(), a.values.end(), b.values.begin(),
                            b.values.end(), std::back_inserter(out.values));
      out.count = static_cast<std::uint32_t>(out.values.size());
    } else {
      const Chunk& sparse = a.dense ? b : a;
      const Chunk& dense = a.dense ? a : b;
      for (std::uint16_t v : sparse.values)
        if (test_bit(dense.bits, v)) out.values.push_back(v);
      out.count = static_cast<std::uint32_t>(out.values.size());
    }
    return out;
  }

  static std::size_t chunk_intersect_count(const Chunk& a, const Chunk& b) {
    if (a.dense && b.dense) {
      std::size_t pop = 0;
      for (std::size_t w = 0; w < kWords; ++w)
        pop += std::popcount(a.bits[w] & b.bits[w]);
      return pop;
    }
    if (!a.dense && !b.dense) {
      std::size_t count = 0;
      auto ia = a.values.begin(), ib = b.values.begin();
      while (ia != a.values.end() && ib != b.values.end()) {
        if (*ia < *ib) {
          ++ia;
        } else if (*ib < *ia) {
          ++ib;
        } else {
          ++count;
          ++ia;
          ++ib;
        }
      }
      return count;
    }
    const Chunk& sparse = a.dense ? b : a;
    const Chunk& dense = a.dense ? a : b;
    std::size_t count = 0;
    for (std::uint16_t v : sparse.values) count += test_bit(dense.bits, v);
    return count;
  }

  static Chunk chunk_union(const Chunk& a, const Chunk& b) {
    Chunk out;
    out.key = a.key;
    if (a.dense || b.dense) {
      out.dense = true;
      if (a.dense && b.dense) {
        out.bits.resize(kWords);
        std::size_t pop = 0;
        for (std::size_t w = 0; w < kWords; ++w) {
          out.bits[w] = a.bits[w] | b.bits[w];
          pop += std::popcount(out.bits[w]);
        }
        out.count = static_cast<std::uint32_t>(pop);
      } else {
        const Chunk& sparse = a.dense ? b : a;
        const Chunk& dense = a.dense ? a : b;
        out.bits = dense.bits;
        out.count = dense.count;
        for (std::uint16_t v : sparse.values) {
          if (!test_bit(out.bits, v)) {
            set_bit(out.bits, v);
            ++out.count;
          }
        }
      }
    } else {
      std::set_union(a.values.begin(), a.values.end(), b.values.begin(),
                     b.values.end(), std::back_inserter(out.values));
      out.count = static_cast<std::uint32_t>(out.values.size());
      normalize(out);
    }
    return out;
  }

  static Chunk chunk_diff(const Chunk& a, const Chunk& b) {
    Chunk out;
    out.key = a.key;
    if (!a.dense) {
      if (!b.dense) {
        std::set_difference(a.values.begin(), a.values.end(), b.values.begin(),
                            b.values.end(), std::back_inserter(out.values));
      } else {
        for (std::uint16_t v : a.values)
          if (!test_bit(b.bits, v)) out.values.push_back(v);
      }
      out.count = static_cast<std::uint32_t>(out.values.size());
    } else {
      out.dense = true;
      out.bits = a.bits;
      out.count = a.count;
      if (b.dense) {
        std::size_t pop = 0;
        for (std::size_t w = 0; w < kWords; ++w) {
          out.bits[w] &= ~b.bits[w];
          pop += std::popcount(out.bits[w]);
        }
        out.count = static_cast<std::uint32_t>(pop);
      } else {
        for (std::uint16_t v : b.values) {
          if (test_bit(out.bits, v)) {
            clear_bit(out.bits, v);
            --out.count;
          }
        }
      }
      normalize(out);
    }
    return out;
  }

  std::vector<Chunk> chunks_;
  std::size_t size_ = 0;
};

}  // namespace setminer
