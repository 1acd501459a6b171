#pragma once

#include <cstdint>
#include <random>

namespace pmean {

// Reproducible generator: std::mt19937_64 seeded directly with the 64-bit
// seed. Its output sequence is fixed by the C++ standard; the conversions
// below avoid the implementation-defined std distributions so that seeds
// reproduce across platforms and languages.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Top 53 bits scaled to [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // next() mod bound; bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pmean
