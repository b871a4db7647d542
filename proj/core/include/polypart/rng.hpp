#pragma once

#include <cstdint>

#include "polypart/rational.hpp"

namespace polypart {

// Splittable counter-based generator. Streams derived with split() are
// statistically independent of the parent, so parallel workers stay
// deterministic given one named seed.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : key_(mix(seed ^ kGamma)) {}

  SplitRng split(std::uint64_t index) const {
    return SplitRng(mix(key_ + mix(index + kGamma)));
  }

  std::uint64_t next() { return mix(key_ + (++counter_) * kGamma); }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // Uniform in [0, 1).
  double next_double() { return (next() >> 11) * 0x1.0p-53; }

  // Uniform on the signed integer grid {-m, ..., m}.
  long next_signed(long m) {
    return static_cast<long>(below(2 * static_cast<std::uint64_t>(m) + 1)) - m;
  }

  // Uniform rational j / 2^log2_den with j in [0, 2^log2_den).
  Rational next_unit_rational(int log2_den = 20) {
    Integer den = 1;
    den <<= log2_den;
    Rational q(Integer(next() >> (64 - log2_den)), den);
    q.canonicalize();
    return q;
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace polypart
