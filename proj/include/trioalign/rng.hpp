#pragma once

#include <cstdint>

namespace trioalign {

// Counter-based generator built on the SplitMix64 finalizer:
// value(n) = mix(key + n * gamma). Streams split cheaply by deriving a new
// key from (seed, stream), and the same (seed, stream, counter) yields the
// same bytes on every platform, which is what the dataset generator and the
// seeded tests rely on.
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed, uint64_t stream = 0)
      : key_(mix(seed ^ 0x9e3779b97f4a7c15ull) ^ mix(stream ^ 0xbf58476d1ce4e5b9ull)) {}

  uint64_t next() { return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ull); }

  // Bounded draw via fixed-point multiply; deterministic across platforms.
  uint64_t below(uint64_t n) {
    if (n == 0) return 0;
    return uint64_t((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // Inclusive range.
  int64_t range(int64_t lo, int64_t hi) {
    return lo + int64_t(below(uint64_t(hi - lo + 1)));
  }

  double unit() { return double(next() >> 11) * 0x1.0p-53; }  // [0, 1)

  char base() { return "ACGT"[below(4)]; }

 private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace trioalign
