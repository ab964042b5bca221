#pragma once
// Deterministic random source. The standard library's distribution objects
// are implementation-defined, so every draw that influences stored results
// is implemented here on top of the raw mt19937_64 stream; identical seeds
// give identical values on every platform.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace refnet {

// 64-bit finalizer with full avalanche (splitmix64 increment + finalizer).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Order-sensitive combination of four values into one seed.
inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                           std::uint64_t d) {
  std::uint64_t h = mix64(a);
  h = mix64(h ^ b);
  h = mix64(h ^ c);
  h = mix64(h ^ d);
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, bound), bound >= 1. Multiply-shift with rejection,
  // exactly uniform.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    using u128 = unsigned __int128;
    u128 m = static_cast<u128>(next_u64()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
      while (lo < threshold) {
        m = static_cast<u128>(next_u64()) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform integer in [lo, hi], inclusive.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw std::invalid_argument("Rng::between: empty range");
    if (lo == hi) return lo;  // no entropy consumed for degenerate ranges
    return lo + below(hi - lo + 1);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Failures before the first success in Bernoulli(p) trials, p in (0, 1].
  std::uint64_t geometric(double p) {
    if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("Rng::geometric: p must be in (0, 1]");
    if (p == 1.0) return 0;
    // 1 - unit() lies in (0, 1], so the log is finite and <= 0.
    const double u = 1.0 - unit();
    const double g = std::floor(std::log(u) / std::log1p(-p));
    if (g >= 9.2e18) return UINT64_MAX;  // p tiny enough that the skip leaves any graph
    return static_cast<std::uint64_t>(g);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace refnet
