#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace rankdel {

/// Portable 64-bit generator (splitmix64). All randomized code in this
/// project draws from it so that a seed pins results bit-for-bit regardless
/// of the standard library in use.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, n). Rejection sampling, so the result is unbiased
  /// and identical on every platform.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (uses two draws).
  double gaussian() {
    double u1, u2;
    do {
      u1 = uniform01();
    } while (u1 == 0.0);
    u2 = uniform01();
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }
};

/// Stream splitting: substream(seed, purpose, index) derives an independent
/// generator per (purpose, index) pair. Generators use one sub-stream per
/// voter so that instances reproduce regardless of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t purpose,
                                 std::uint64_t index = 0) {
  SplitMix64 m(seed ^ (0x9e3779b97f4a7c15ULL * (purpose + 1)));
  std::uint64_t a = m.next();
  SplitMix64 m2(a ^ (0xd1b54a32d192ed03ULL * (index + 1)));
  return m2.next();
}

inline SplitMix64 substream(std::uint64_t seed, std::uint64_t purpose,
                            std::uint64_t index = 0) {
  return SplitMix64(derive_seed(seed, purpose, index));
}

}  // namespace rankdel
