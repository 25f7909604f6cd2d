#include "ghlab/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ghlab/permutation.hpp"

namespace ghlab {

Relation::Relation(std::size_t left_size, std::size_t right_size, std::vector<IndexPair> pairs)
    : left_(left_size), right_(right_size), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  for (const auto& [a, b] : pairs_) {
    if (a >= left_ || b >= right_) throw Error(ErrorKind::IndexOutOfRange, "", {a, b});
  }
}

Relation Relation::product(std::size_t left_size, std::size_t right_size) {
  std::vector<IndexPair> p;
  for (std::size_t i = 0; i < left_size; ++i)
    for (std::size_t j = 0; j < right_size; ++j) p.emplace_back(i, j);
  return Relation(left_size, right_size, std::move(p));
}

Relation Relation::identity(std::size_t n) {
  std::vector<IndexPair> p;
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(i, i);
  return Relation(n, n, std::move(p));
}

BlockCorrespondence::BlockCorrespondence(Partition left, Partition right,
                                         std::vector<std::size_t> matching)
    : left_(std::move(left)), right_(std::move(right)), match_(std::move(matching)) {
  if (left_.block_count() != right_.block_count()) {
    throw Error(ErrorKind::BadBlockCount, "matched partitions need equal block counts");
  }
  if (match_.empty()) {
    match_.resize(left_.block_count());
    for (std::size_t i = 0; i < match_.size(); ++i) match_[i] = i;
  }
  Permutation check(match_);  // throws BadPermutation
  (void)check;
  if (match_.size() != left_.block_count()) throw Error(ErrorKind::BadPermutation, "matching has wrong size");
}

Relation BlockCorrespondence::expansion() const {
  std::vector<IndexPair> p;
  for (std::size_t i = 0; i < block_count(); ++i)
    for (auto a : left_[i])
      for (auto b : right_block(i)) p.emplace_back(a, b);
  return Relation(left_.ground_size(), right_.ground_size(), std::move(p));
}

bool BlockCorrespondence::singleton_sided() const {
  for (std::size_t i = 0; i < block_count(); ++i)
    if (left_[i].size() > 1 && right_block(i).size() > 1) return false;
  return true;
}

double distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Relation& r) {
  if (r.pairs().empty()) throw Error(ErrorKind::EmptyRelation, "distortion of an empty relation");
  if (r.left_size() != x.size() || r.right_size() != y.size()) {
    throw Error(ErrorKind::DimensionMismatch, "relation does not match the spaces");
  }
  const auto& p = r.pairs();
  double d = 0.0;
  for (std::size_t s = 0; s < p.size(); ++s)
    for (std::size_t u = s + 1; u < p.size(); ++u)
      d = std::max(d, std::abs(x.distance(p[s].first, p[u].first) -
                               y.distance(p[s].second, p[u].second)));
  return d;
}

bool is_correspondence(const Relation& r) {
  std::vector<bool> l(r.left_size(), false), rr(r.right_size(), false);
  for (const auto& [a, b] : r.pairs()) l[a] = rr[b] = true;
  return std::all_of(l.begin(), l.end(), [](bool v) { return v; }) &&
         std::all_of(rr.begin(), rr.end(), [](bool v) { return v; });
}

bool is_irreducible(const Relation& r) {
  if (!is_correspondence(r)) return false;
  std::vector<std::size_t> ldeg(r.left_size(), 0), rdeg(r.right_size(), 0);
  for (const auto& [a, b] : r.pairs()) {
    ++ldeg[a];
    ++rdeg[b];
  }
  // Removing (a,b) keeps surjectivity iff both endpoints have another partner.
  return std::none_of(r.pairs().begin(), r.pairs().end(),
                      [&](const IndexPair& p) { return ldeg[p.first] > 1 && rdeg[p.second] > 1; });
}

double block_distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                        const BlockCorrespondence& b) {
  const std::size_t k = b.block_count();
  double d = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    d = std::max(d, block_diameter(x, b.left()[i]));
    d = std::max(d, block_diameter(y, b.right_block(i)));
  }
  auto inf_sup = [](const FiniteMetricSpace& s, const Block& p, const Block& q) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (auto a : p)
      for (auto c : q) {
        lo = std::min(lo, s.distance(a, c));
        hi = std::max(hi, s.distance(a, c));
      }
    return std::pair{lo, hi};
  };
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      auto [xlo, xhi] = inf_sup(x, b.left()[i], b.left()[j]);
      auto [ylo, yhi] = inf_sup(y, b.right_block(i), b.right_block(j));
      d = std::max({d, xhi - ylo, yhi - xlo});
    }
  }
  return d;
}

}  // namespace ghlab
