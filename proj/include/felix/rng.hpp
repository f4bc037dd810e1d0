#pragma once

#include <cstdint>
#include <random>

namespace felix::rng {

// SplitMix64 step; used to derive substream seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Seed for a named substream. Streams are independent of one another, so
// adding draws to one stream never shifts the values produced by another.
// Convention used across the project:
//   stream 1: graph construction
//   stream 2: prosociality initialisation
//   stream 3: wealth draws
//   replicate r of an experiment uses derive(seed, 1000 + r) as its base.
inline std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream * 0x9e3779b97f4a7c15ull + 1));
}

// mt19937_64 engine with portable uniform mappings. std::*_distribution is
// implementation-defined, so uniforms are produced by explicit bit twiddling
// to keep outputs identical across standard libraries.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  // Uniform double in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Uniform integer in [0, n) by rejection (exact, portable).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = gen_();
    while (x >= limit) x = gen_();
    return x % n;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace felix::rng
