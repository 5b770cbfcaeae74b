#pragma once

#include <cmath>
#include <cstdint>

namespace dcj {

// xoshiro256** with splitmix64 seeding. Streams are split by (seed, stream):
// the four state words are successive splitmix64 outputs starting from
// seed + GOLDEN * (stream + 1), so replicates never share a stream and the
// whole construction is reproducible across platforms.
class Xoshiro256 {
public:
  explicit Xoshiro256(uint64_t seed, uint64_t stream = 0) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    for (auto& w : s_) w = splitmix64(z);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x9E3779B97F4A7C15ULL;
  }

  uint64_t next() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Unbiased uniform integer in [0, n).
  uint64_t uniform(uint64_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  bool bernoulli(double p) { return next_double() < p; }

  // Exponential(1) via inversion; log1p keeps u near 0 accurate.
  double exponential() { return -std::log1p(-next_double()); }

private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  uint64_t s_[4];
};

}  // namespace dcj
