#pragma once

#include <cstdint>
#include <random>

namespace arborlab {

/// Deterministic random stream. All samplers in the library draw from this
/// type, never from std::uniform_*_distribution, so that a seed reproduces
/// the same values on every platform and standard library.
///
/// Shard derivation: shard(i) reseeds with splitmix64(seed ^ (i+1)), so a
/// sharded computation is reproducible from (seed, shard index) alone.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return gen_(); }

  /// Uniform in [0, n), n >= 1. Rejection sampling, bias-free.
  std::uint64_t next_below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  Rng shard(std::uint64_t index) const { return Rng(splitmix64(seed_ ^ (index + 1))); }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

} // namespace arborlab
