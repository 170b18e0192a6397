#pragma once

#include <cstdint>
#include <random>

namespace setminer {

// Deterministic RNG used by generators and samplers. std::mt19937_64 is
// fully specified by the standard, but the std distributions are not, so
// bounded draws and uniform doubles are derived here explicitly. This keeps
// generated graphs bit-identical across compilers and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, bound). Rejection sampling, exact.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace setminer
