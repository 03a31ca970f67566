#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace seating {

/// SplitMix64 output finalizer. A bijection on 64-bit values.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed for run `index` under `master`: mix64(master + (index + 1) * golden).
/// Injective in `index` for a fixed master since the golden increment is odd
/// and mix64 is a bijection.
constexpr std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Deterministic pseudo-random stream. The engine is std::mt19937_64, whose
/// output sequence is fixed by the standard; bounded integers use Lemire's
/// multiply-and-reject method so the whole stream is portable across
/// standard libraries.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n). Requires n > 0.
  std::size_t uniform_index(std::size_t n) {
    const auto bound = static_cast<std::uint64_t>(n);
    auto product = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::size_t>(product >> 64);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace seating
