#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace nbc {

// Substream identifiers. Every random consumer draws from its own
// mt19937_64 engine seeded with split_seed(seed, stream), so adding draws to
// one consumer never shifts another consumer's sequence.
enum class Stream : std::uint64_t {
  kErBlock = 1,
  kHubEdges = 2,
  kDegrees = 3,
  kStubMatching = 4,
  kSolverJitter = 5,
  kTest = 99,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t split_seed(std::uint64_t seed, Stream stream) noexcept {
  return splitmix64(splitmix64(seed) ^ splitmix64(static_cast<std::uint64_t>(stream)));
}

// Reproducible random source. The engine's output sequence is fixed by the
// C++ standard; the conversions below avoid the implementation-defined
// <random> distributions so that results are identical across platforms.
class Rng {
 public:
  Rng(std::uint64_t seed, Stream stream) : engine_(split_seed(seed, stream)) {}

  std::uint64_t next_u64() { return engine_(); }
  void discard(std::uint64_t count) { engine_.discard(count); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_index(std::uint64_t bound) {
    // Lemire's nearly divisionless method.
    std::uint64_t x = engine_();
    __uint128_t product = static_cast<__uint128_t>(x) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = engine_();
        product = static_cast<__uint128_t>(x) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  // Number of failures before the next success of a Bernoulli(p) sequence,
  // 0 < p < 1. Used to skip over absent edges in O(m) generation.
  std::uint64_t geometric_skip(double log1m_p) {
    const double r = uniform();
    const double skip = std::floor(std::log1p(-r) / log1m_p);
    if (!(skip < 0x1.0p62)) return std::uint64_t{1} << 62;
    return static_cast<std::uint64_t>(skip);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nbc
