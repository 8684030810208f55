#pragma once

// Seeded generators for property tests. SplitMix64 keeps sequences identical
// across standard libraries.

#include <cstdint>

#include "dyndeg/gaussian.hpp"

namespace testgen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi].
  long range(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do v = next(); while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  bool coin() { return next() & 1U; }

 private:
  std::uint64_t s_;
};

inline dyndeg::GaussianInt gaussian(Rng& r, long bound) {
  return {r.range(-bound, bound), r.range(-bound, bound)};
}

inline dyndeg::GaussianInt admissible(Rng& r, long bound) {
  for (;;) {
    dyndeg::GaussianInt z = gaussian(r, bound);
    if (dyndeg::is_admissible(z)) return z;
  }
}

inline dyndeg::IntMatrix2x2 matrix(Rng& r, long bound) {
  for (;;) {
    dyndeg::IntMatrix2x2 m{r.range(-bound, bound), r.range(-bound, bound), r.range(-bound, bound),
                           r.range(-bound, bound)};
    if (sgn(m.det()) != 0) return m;
  }
}

}  // namespace testgen
