#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ghlab/metric_space.hpp"

namespace ghlab {

using Block = std::vector<std::size_t>;

/// A partition of {0, ..., n-1} into nonempty blocks. Stored canonically:
/// each block sorted, blocks ordered by their smallest element.
class Partition {
 public:
  Partition() = default;

  /// Throws BadArgument unless the blocks are nonempty, disjoint and cover
  /// {0..ground_size-1}.
  Partition(std::size_t ground_size, std::vector<Block> blocks);

  /// From a restricted growth string: point i goes to block rgs[i].
  static Partition from_labels(const std::vector<std::size_t>& labels);

  static Partition singletons(std::size_t n);

  std::size_t ground_size() const noexcept { return n_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& operator[](std::size_t i) const { return blocks_[i]; }

  /// Block index of every point.
  std::vector<std::size_t> labels() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Block> blocks_;
};

/// Enumerates the partitions of {0..n-1} into exactly k blocks, each once,
/// as restricted growth strings a[0..n-1] (a[0] = 0,
/// a[i] <= 1 + max(a[0..i-1])) in lexicographic order.
class PartitionEnumerator {
 public:
  /// Throws BadBlockCount unless 1 <= k <= n.
  PartitionEnumerator(std::size_t n, std::size_t k);

  /// Advances to the next partition; false once exhausted. Must be called
  /// before reading the first partition.
  bool next();

  const std::vector<std::size_t>& labels() const noexcept { return a_; }
  Partition current() const { return Partition::from_labels(a_); }

 private:
  bool fill_from(std::size_t pos);

  std::size_t n_, k_;
  std::vector<std::size_t> a_;
  std::vector<std::size_t> prefix_max_;  // prefix_max_[i] = max(a[0..i])
  bool started_ = false;
  bool done_ = false;
};

/// Calls `visit` on every k-block partition; stop early by returning false.
void for_each_partition(std::size_t n, std::size_t k,
                        const std::function<bool(const Partition&)>& visit);

/// Stirling number of the second kind, S(n, k).
unsigned long long stirling2(std::size_t n, std::size_t k);

// Partition functionals on a metric space.
double block_diameter(const FiniteMetricSpace& x, const Block& b);
double partition_diameter(const FiniteMetricSpace& x, const Partition& d);

/// alpha(D) = min over distinct blocks of |X_i X_j| (+inf for one block).
double partition_alpha(const FiniteMetricSpace& x, const Partition& d);

/// beta(D) = max over distinct blocks of |X_i X_j|' (0 for one block).
double partition_beta(const FiniteMetricSpace& x, const Partition& d);

}  // namespace ghlab
