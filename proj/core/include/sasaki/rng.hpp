#pragma once

#include <cstdint>
#include <random>

namespace sasaki {

/// Reproducible random source for randomized checks.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and
/// converts to doubles by bit manipulation rather than through
/// std::uniform_real_distribution, whose algorithm is implementation-defined.
/// A given seed therefore produces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal by Box-Muller (one value per call, the pair partner is
  /// discarded to keep the stream position simple).
  double normal();

  int integer(int lo, int hi_inclusive) {
    const auto span = static_cast<std::uint64_t>(hi_inclusive - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sasaki
