#pragma once

#include <cstdint>

namespace coarsedim {

// splitmix64; every randomized routine takes one of these seeded from the
// run config so identical configs give byte-identical reports.
struct SplitMix64 {
  uint64_t state = 0x9e3779b97f4a7c15ull;

  explicit SplitMix64(uint64_t seed = 0) : state(seed + 0x9e3779b97f4a7c15ull) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0.
  uint64_t below(uint64_t n) { return next() % n; }

  long long range(long long lo, long long hi) {  // inclusive bounds
    return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  SplitMix64 split() { return SplitMix64(next()); }
};

}  // namespace coarsedim
