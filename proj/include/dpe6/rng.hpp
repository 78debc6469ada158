#pragma once

#include <cstdint>

#include "dpe6/quadext.hpp"

namespace dpe6 {

/// Deterministic splittable generator (splitmix64). Distribution mapping is
/// written out here so reports are byte-identical across platforms and
/// standard libraries; per-trial streams are derived from (seed, stream).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed * 0x9E3779B97F4A7C15ULL + 0x243F6A8885A308D3ULL) {}

  static Rng stream(std::uint64_t seed, std::uint64_t stream_index) {
    Rng r(seed);
    r.state_ ^= 0xBF58476D1CE4E5B9ULL * (stream_index + 1);
    r.next();
    return r;
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi] (inclusive), by rejection.
  long uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return lo + static_cast<long>(v % span);
  }

  /// Rational with numerator in [-max_num, max_num] and denominator in
  /// [1, max_den].
  Rational rational(long max_num = 100, long max_den = 100) {
    return Rational(uniform(-max_num, max_num)) / uniform(1, max_den);
  }

  Rational nonzero_rational(long max_num = 100, long max_den = 100) {
    Rational r = rational(max_num, max_den);
    while (r == 0) r = rational(max_num, max_den);
    return r;
  }

  QuadExt quadext(long max_num = 100, long max_den = 100) {
    Rational u = rational(max_num, max_den);
    Rational v = rational(max_num, max_den);
    return QuadExt(u, v);
  }

 private:
  std::uint64_t state_;
};

}  // namespace dpe6
