#pragma once

#include <cstdint>

#include "fatnielsen/cs_moves.hpp"

namespace fatnielsen {

// SplitMix64 (Steele, Lea, Flood 2014). Counter-based: the n-th output depends
// only on the seed and n, and split() derives an independent stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

struct RandomWalk {
  PolygonDomain domain;
  CSPath path;
};

// `steps` uniformly chosen moves, never undoing the previous move directly.
RandomWalk random_walk(const PolygonDomain& start, int steps, std::uint64_t seed);

}  // namespace fatnielsen
