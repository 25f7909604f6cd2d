#include "ghlab/random.hpp"

namespace ghlab {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

FiniteMetricSpace random_space(std::size_t n, DistanceRange range, Rng& rng,
                               std::size_t max_attempts) {
  if (n == 0) throw Error(ErrorKind::EmptySpace, "random space needs at least one point");
  if (!(range.lo > 0.0) || !(range.hi >= range.lo)) {
    throw Error(ErrorKind::BadArgument, "distance range must satisfy 0 < lo <= hi");
  }
  std::vector<double> rho(pair_count(n));
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    for (double& r : rho) r = rng.uniform(range.lo, range.hi);
    if (!check_condensed(n, rho, 0.0)) return FiniteMetricSpace::trusted(n, rho);
  }
  throw Error(ErrorKind::BadArgument, "rejection sampling did not produce a metric");
}

}  // namespace ghlab
