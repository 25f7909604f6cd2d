#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ghlab/metric_space.hpp"
#include "ghlab/partition.hpp"

namespace ghlab {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// A relation between the point sets of two spaces of sizes `left_size`
/// and `right_size`. A correspondence is a relation whose projections are
/// onto both sides; is_correspondence() checks that, the type does not
/// enforce it.
class Relation {
 public:
  Relation(std::size_t left_size, std::size_t right_size, std::vector<IndexPair> pairs);

  static Relation product(std::size_t left_size, std::size_t right_size);
  static Relation identity(std::size_t n);

  std::size_t left_size() const noexcept { return left_; }
  std::size_t right_size() const noexcept { return right_; }
  const std::vector<IndexPair>& pairs() const noexcept { return pairs_; }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t left_, right_;
  std::vector<IndexPair> pairs_;  // sorted, unique
};

/// Matched pair of partitions with the same number of blocks; block i of
/// the left partition is related to block i of the right one.
class BlockCorrespondence {
 public:
  BlockCorrespondence(Partition left, Partition right, std::vector<std::size_t> matching = {});

  const Partition& left() const noexcept { return left_; }
  const Partition& right() const noexcept { return right_; }
  std::size_t block_count() const noexcept { return left_.block_count(); }

  /// Right block matched with left block i.
  const Block& right_block(std::size_t i) const { return right_[match_[i]]; }

  /// The relation union_i X_i x Y_i.
  Relation expansion() const;

  /// True when every matched block pair has a one-point side.
  bool singleton_sided() const;

  friend bool operator==(const BlockCorrespondence&, const BlockCorrespondence&) = default;

 private:
  Partition left_, right_;
  std::vector<std::size_t> match_;
};

/// max | |xx'| - |yy'| | over pairs (x,y), (x',y') of the relation.
double distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Relation& r);

bool is_correspondence(const Relation& r);

/// A correspondence from which no single pair can be removed while keeping
/// it a correspondence.
bool is_irreducible(const Relation& r);

/// Distortion of the expansion computed blockwise:
/// max{diam X_i, diam Y_i, |X_iX_j|' - |Y_iY_j|, |Y_iY_j|' - |X_iX_j| : i != j}.
double block_distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                        const BlockCorrespondence& b);

}  // namespace ghlab
