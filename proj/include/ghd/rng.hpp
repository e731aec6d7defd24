#pragma once

#include <cstdint>

#include "ghd/bitstring.hpp"

namespace ghd {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Counter-based generator keyed by (seed, stream_index). Identical keys
/// give identical sequences on every platform and thread schedule, and
/// distinct stream indices give independent substreams, so Monte Carlo
/// loops can hand stream i to trial i and stay bit-reproducible at any
/// thread count.
class SeededRng {
 public:
  SeededRng(std::uint64_t seed, std::uint64_t stream_index = 0)
      : seed_(seed), stream_(stream_index) {
    state_ = splitmix64(seed ^ splitmix64(stream_index ^ 0x5851f42d4c957f2dull));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_; }

  SeededRng substream(std::uint64_t offset) const { return SeededRng(seed_, stream_ + offset); }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool next_bool() { return next_u64() >> 63; }

  /// Uniform in [0, bound) by rejection; bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  BitString next_bits(std::size_t n) {
    BitString s(n);
    std::size_t full = n / 64;
    for (std::size_t i = 0; i < full; ++i) s.mutable_word(i) = next_u64();
    if (n % 64 != 0) s.mutable_word(full) = next_u64() & ((std::uint64_t{1} << (n % 64)) - 1);
    return s;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t state_;
};

}  // namespace ghd
