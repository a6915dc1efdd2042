#pragma once

#include <cstdint>
#include <random>

#include "qfkg/rational.hpp"

namespace qfkg {

/// Seeded generator. Bounded draws use rejection on raw 64-bit output rather
/// than std distributions, so streams are identical across standard
/// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  /// a/b with a uniform in [min_num, max_num], b uniform in [1, max_den].
  Rational rational(unsigned min_num, unsigned max_num, unsigned max_den) {
    Rational r(static_cast<unsigned long>(between(min_num, max_num)), static_cast<unsigned long>(between(1, max_den)));
    r.canonicalize();
    return r;
  }

 private:
  std::mt19937_64 engine_;
};

/// Independent per-instance seed from a run seed and an index (splitmix64).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace qfkg
