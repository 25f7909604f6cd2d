#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>

#include "ghlab/correspondence.hpp"
#include "ghlab/metric_space.hpp"
#include "ghlab/partition.hpp"
#include "ghlab/permutation.hpp"
#include "ghlab/random.hpp"

namespace ghlab {

enum class GhBackend {
  /// Depth-first search over irreducible correspondences with partial
  /// distortion pruning.
  BranchAndBound,
  /// Plain enumeration of matched partition pairs with a one-point side.
  IrreducibleBlocks,
};

struct GhResult {
  /// d_GH(X, Y) = half the minimal distortion.
  double distance = 0.0;
  /// An optimal irreducible correspondence.
  BlockCorrespondence witness;
  /// Search nodes visited (branch-and-bound) or candidates scored (blocks).
  std::uint64_t nodes = 0;
};

/// Exact Gromov-Hausdorff distance between two finite metric spaces.
///
/// An optimal irreducible correspondence always exists and every
/// irreducible correspondence is a union of products X_i x Y_i of matched
/// blocks in which one side is a single point, so the minimum is taken over
/// that family only.
GhResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  GhBackend backend = GhBackend::BranchAndBound);

/// Branch-and-bound restricted to correspondences with distortion strictly
/// below `bound`. Returns nullopt when none exists.
std::optional<GhResult> gh_exact_below(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                       double bound);

struct BijectionResult {
  double distance = 0.0;
  Permutation bijection;  // point i of X is matched with bijection(i) of Y
};

/// Half the minimal distortion over bijections only. Throws
/// CardinalityMismatch unless #X == #Y.
BijectionResult gh_bijective(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

struct MinDiameterResult {
  /// d_n(X); +infinity when n > #X.
  double value = std::numeric_limits<double>::infinity();
  std::optional<Partition> witness;
};

/// d_n(X) = min diam D over partitions D of X into n nonempty blocks.
MinDiameterResult min_diameter_partition(const FiniteMetricSpace& x, std::size_t n);

struct GapWitness {
  FiniteMetricSpace x;
  FiniteMetricSpace y;
  double exact = 0.0;
  double bijective = 0.0;
  BlockCorrespondence correspondence;
  std::uint64_t trial = 0;
};

struct GapSearchOptions {
  std::size_t points = 4;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 1;
  DistanceRange range{};
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 1;
};

inline constexpr double kGapThreshold = 1e-6;

/// Draws pairs of random equal-size spaces until the best bijection is
/// worse than the best correspondence by more than kGapThreshold. Trial i
/// uses its own generator seeded with mix_seed(seed, i); the lowest
/// successful trial index is returned, independent of thread count.
std::optional<GapWitness> bijection_gap_search(const GapSearchOptions& opts);

/// The random pair a given gap-search trial draws.
std::pair<FiniteMetricSpace, FiniteMetricSpace> gap_trial_spaces(const GapSearchOptions& opts,
                                                                 std::uint64_t trial);

/// Reads GHLAB_THREADS (0 or unset means hardware concurrency).
unsigned threads_from_env();

}  // namespace ghlab
