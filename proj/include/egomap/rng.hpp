#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace egomap {

// Deterministic random source shared by every seeded operation. mt19937_64 is
// fully specified by the standard, and the value mappings below avoid
// std::uniform_*_distribution, whose output differs between standard library
// implementations. Same seed, same sequence, on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1) with 53 bits of precision.
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). Rejection keeps it unbiased; n must be > 0.
  std::uint64_t next_below(std::uint64_t n);

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[next_below(i)]);
    }
  }

private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Independent substream for (seed, index). Trials seeded this way give the
// same results whether they run sequentially or in parallel.
Rng derive_stream(std::uint64_t seed, std::uint64_t index);

}  // namespace egomap
