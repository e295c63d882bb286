#pragma once
// Counter-based deterministic random source. Draw i of stream (seed, stream)
// is a pure function of (seed, stream, i) -- SplitMix64 finalizers over a
// Weyl sequence -- so sweeps can be sampled by index from any thread in any
// order and still reproduce byte-identical output.

#include <cstdint>

#include "fbtube/complex2.hpp"

namespace fbtube {

namespace detail {
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}
}  // namespace detail

struct CounterRng {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  std::uint64_t at(std::uint64_t i) const {
    return detail::mix64(detail::mix64(seed + kGolden * (stream + 1)) +
                         kGolden * (i + 1));
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01(std::uint64_t i) const {
    return static_cast<double>(at(i) >> 11) * 0x1.0p-53;
  }

  double uniform(std::uint64_t i, double a, double b) const {
    return a + (b - a) * uniform01(i);
  }

  /// Uniform point of the closed disk |z| <= radius (area measure).
  /// Consumes draws 2i and 2i+1.
  Cx disk(std::uint64_t i, double radius) const {
    const double r = radius * std::sqrt(uniform01(2 * i));
    const double theta = 6.283185307179586476925286766559 * uniform01(2 * i + 1);
    return Cx(r * std::cos(theta), r * std::sin(theta));
  }

  /// Uniform point of the bidisk |z1| <= r1, |z2| <= r2. Consumes draws
  /// 4i .. 4i+3.
  C2Point bidisk(std::uint64_t i, double r1, double r2) const {
    CounterRng a{seed, stream * 2 + 1};
    CounterRng b{seed, stream * 2 + 2};
    return {a.disk(i, r1), b.disk(i, r2)};
  }
};

}  // namespace fbtube
