#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <span>
#include <vector>

#include "setminer/types.hpp"

namespace setminer {

// A clique is a strictly ascending vertex array.
using Clique = std::vector<VertexId>;

// Receives pattern emissions from mining kernels. Emission is thread-safe;
// kernels may emit from any task in any order, and the emitted multiset is
// schedule-independent. Count-only sinks never overflow; collecting sinks
// throw SinkOverflowError past their capacity.
class CliqueSink {
 public:
  enum class Mode { Count, Collect, Stream };
  using Callback = std::function<void(std::span<const VertexId>)>;

  static constexpr std::size_t kDefaultCap = 16'000'000;

  static CliqueSink counting() { return CliqueSink(Mode::Count, 0, nullptr); }
  static CliqueSink collecting(std::size_t cap = kDefaultCap) {
    return CliqueSink(Mode::Collect, cap, nullptr);
  }
  static CliqueSink streaming(Callback cb) {
    return CliqueSink(Mode::Stream, 0, std::move(cb));
  }

  CliqueSink(const CliqueSink&) = delete;
  CliqueSink& operator=(const CliqueSink&) = delete;

  // `clique` must be strictly ascending.
  void emit(std::span<const VertexId> clique) {
    count_.fetch_add(1, std::memory_order_relaxed);
    if (mode_ == Mode::Count) return;
    std::lock_guard lock(mutex_);
    if (mode_ == Mode::Collect) {
      if (collected_.size() >= cap_)
        throw SinkOverflowError("clique sink capacity exceeded (" +
                                std::to_string(cap_) + ")");
      collected_.emplace_back(clique.begin(), clique.end());
    } else {
      callback_(clique);
    }
  }

  Mode mode() const { return mode_; }
  std::uint64_t count() const { return count_.load(std::memory_order_relaxed); }

  const std::vector<Clique>& cliques() const { return collected_; }

  // Canonical view: cliques sorted lexicographically. Collection order is
  // schedule-dependent, so comparisons go through this.
  std::vector<Clique> sorted_cliques() const {
    std::vector<Clique> out = collected_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  CliqueSink(Mode mode, std::size_t cap, Callback cb)
      : mode_(mode), cap_(cap), callback_(std::move(cb)) {}

  Mode mode_;
  std::size_t cap_;
  Callback callback_;
  std::atomic<std::uint64_t> count_{0};
  std::mutex mutex_;
  std::vector<Clique> collected_;
};

// Sink for k-clique-star pairs: a k-clique plus the nonempty set of
// vertices adjacent to all its members.
class StarSink {
 public:
  enum class Mode { Count, Collect, Stream };
  using Callback =
      std::function<void(std::span<const VertexId>, std::span<const VertexId>)>;

  static StarSink counting() { return StarSink(Mode::Count, nullptr); }
  static StarSink collecting() { return StarSink(Mode::Collect, nullptr); }
  static StarSink streaming(Callback cb) {
    return StarSink(Mode::Stream, std::move(cb));
  }

  StarSink(const StarSink&) = delete;
  StarSink& operator=(const StarSink&) = delete;

  void emit(std::span<const VertexId> clique, std::span<const VertexId> star) {
    count_.fetch_add(1, std::memory_order_relaxed);
    if (mode_ == Mode::Count) return;
    std::lock_guard lock(mutex_);
    if (mode_ == Mode::Collect)
      collected_.emplace_back(Clique(clique.begin(), clique.end()),
                              std::vector<VertexId>(star.begin(), star.end()));
    else
      callback_(clique, star);
  }

  Mode mode() const { return mode_; }
  std::uint64_t count() const { return count_.load(std::memory_order_relaxed); }

  const std::vector<std::pair<Clique, std::vector<VertexId>>>& pairs() const {
    return collected_;
  }

  std::vector<std::pair<Clique, std::vector<VertexId>>> sorted_pairs() const {
    auto out = collected_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  StarSink(Mode mode, Callback cb) : mode_(mode), callback_(std::move(cb)) {}

  Mode mode_;
  Callback callback_;
  std::atomic<std::uint64_t> count_{0};
  std::mutex mutex_;
  std::vector<std::pair<Clique, std::vector<VertexId>>> collected_;
};

}  // namespace setminer
