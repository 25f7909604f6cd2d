#pragma once

#include <cstdint>
#include <random>

#include "ghlab/metric_space.hpp"

namespace ghlab {

// All randomness in the project comes from std::mt19937_64, whose output
// sequence is fixed by the standard. Reals are built from the top 53 bits
// of one draw so results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next_u64() % bound; }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives independent stream seeds from (seed, index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

struct DistanceRange {
  double lo = 0.1;
  double hi = 1.0;
};

/// i.i.d. uniform distances on [range.lo, range.hi), redrawn until every
/// triangle inequality holds. Throws BadArgument after `max_attempts`.
FiniteMetricSpace random_space(std::size_t n, DistanceRange range, Rng& rng,
                               std::size_t max_attempts = 1'000'000);

}  // namespace ghlab
