#pragma once
// Deterministic PRNG used by every generator: splitmix64, with one
// independent substream per snapshot derived from (seed, t). The algorithm
// identity is part of the instance file contract: a "gen" header line must
// regenerate identical edges on every platform, so nothing here may depend
// on the standard library's distribution implementations.

#include <cstdint>

namespace tempex {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound), bound >= 1, via fixed-point multiply
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t scramble64(std::uint64_t x) { return SplitMix64(x).next(); }

// Substream for snapshot t: states are decorrelated by scrambling the seed,
// spreading t by the 64-bit golden ratio, and scrambling again.
inline SplitMix64 snapshot_stream(std::uint64_t seed, std::int64_t t) {
  std::uint64_t s = scramble64(seed) ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t));
  return SplitMix64(scramble64(s));
}

}  // namespace tempex
