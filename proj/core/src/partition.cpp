#include "ghlab/partition.hpp"

#include <algorithm>
#include <limits>

namespace ghlab {

Partition::Partition(std::size_t ground_size, std::vector<Block> blocks) : n_(ground_size) {
  std::vector<bool> seen(n_, false);
  std::size_t covered = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw Error(ErrorKind::BadArgument, "partition blocks must be nonempty");
    std::sort(b.begin(), b.end());
    for (auto i : b) {
      if (i >= n_) throw Error(ErrorKind::IndexOutOfRange, "", {i});
      if (seen[i]) throw Error(ErrorKind::BadArgument, "partition blocks overlap", {i});
      seen[i] = true;
      ++covered;
    }
  }
  if (covered != n_) throw Error(ErrorKind::BadArgument, "partition blocks do not cover the space");
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& l, const Block& r) { return l.front() < r.front(); });
  blocks_ = std::move(blocks);
}

Partition Partition::from_labels(const std::vector<std::size_t>& labels) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= blocks.size()) blocks.resize(labels[i] + 1);
    blocks[labels[i]].push_back(i);
  }
  return Partition(labels.size(), std::move(blocks));
}

Partition Partition::singletons(std::size_t n) {
  std::vector<Block> blocks(n);
  for (std::size_t i = 0; i < n; ++i) blocks[i] = {i};
  return Partition(n, std::move(blocks));
}

std::vector<std::size_t> Partition::labels() const {
  std::vector<std::size_t> out(n_);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (auto i : blocks_[b]) out[i] = b;
  return out;
}

PartitionEnumerator::PartitionEnumerator(std::size_t n, std::size_t k)
    : n_(n), k_(k), a_(n, 0), prefix_max_(n, 0) {
  if (k < 1 || k > n) {
    throw Error(ErrorKind::BadBlockCount,
                "need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

// Completes a[pos..n-1] with the lexicographically smallest suffix that
// still reaches exactly k blocks.
bool PartitionEnumerator::fill_from(std::size_t pos) {
  std::size_t used = pos == 0 ? 0 : prefix_max_[pos - 1] + 1;
  for (std::size_t i = pos; i < n_; ++i) {
    std::size_t remaining = n_ - i;
    // Points left must open the blocks still missing.
    std::size_t v = (k_ - used >= remaining) ? used : 0;
    if (v >= k_) return false;
    a_[i] = v;
    prefix_max_[i] = i == 0 ? v : std::max(prefix_max_[i - 1], v);
    used = prefix_max_[i] + 1;
  }
  return used == k_;
}

bool PartitionEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (!fill_from(0)) done_ = true;
    return !done_;
  }
  // Increment the rightmost position that can grow and refill the tail.
  for (std::size_t pos = n_; pos-- > 1;) {
    std::size_t limit = std::min(prefix_max_[pos - 1] + 1, k_ - 1);
    while (a_[pos] < limit) {
      ++a_[pos];
      prefix_max_[pos] = std::max(prefix_max_[pos - 1], a_[pos]);
      std::size_t used = prefix_max_[pos] + 1;
      // The tail must still be able to open the missing blocks.
      if (k_ - used > n_ - pos - 1) continue;
      if (pos + 1 == n_ ? used == k_ : fill_from(pos + 1)) return true;
    }
  }
  done_ = true;
  return false;
}

void for_each_partition(std::size_t n, std::size_t k,
                        const std::function<bool(const Partition&)>& visit) {
  PartitionEnumerator e(n, k);
  while (e.next())
    if (!visit(e.current())) return;
}

unsigned long long stirling2(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::vector<unsigned long long> row(k + 1, 0);
  row[0] = 1;  // S(0, 0)
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

double block_diameter(const FiniteMetricSpace& x, const Block& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) d = std::max(d, x.distance(b[i], b[j]));
  return d;
}

double partition_diameter(const FiniteMetricSpace& x, const Partition& d) {
  double out = 0.0;
  for (const auto& b : d.blocks()) out = std::max(out, block_diameter(x, b));
  return out;
}

double partition_alpha(const FiniteMetricSpace& x, const Partition& d) {
  double out = std::numeric_limits<double>::infinity();
  const auto lab = d.labels();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (lab[i] != lab[j]) out = std::min(out, x.distance(i, j));
  return out;
}

double partition_beta(const FiniteMetricSpace& x, const Partition& d) {
  double out = 0.0;
  const auto lab = d.labels();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (lab[i] != lab[j]) out = std::max(out, x.distance(i, j));
  return out;
}

}  // namespace ghlab
