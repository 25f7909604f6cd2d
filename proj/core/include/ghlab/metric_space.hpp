#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ghlab/error.hpp"

namespace ghlab {

inline constexpr double kDefaultTolerance = 1e-9;

using Grid = std::vector<std::vector<double>>;

/// Number of unordered pairs of an n-point set, N = n(n-1)/2.
constexpr std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Position of the pair {i, j}, i != j, in the condensed row-major vector
/// (rho_12, ..., rho_1n, rho_23, ..., rho_(n-1)n). Indices are 0-based.
constexpr std::size_t condensed_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Inverse of condensed_index: the pair (i, j), i < j, stored at `index`.
std::pair<std::size_t, std::size_t> condensed_pair(std::size_t n, std::size_t index);

/// A finite metric space on points {0, ..., n-1}, stored as its condensed
/// distance vector. Instances are immutable and always satisfy the metric
/// axioms (up to the tolerance used at construction).
class FiniteMetricSpace {
 public:
  /// Validating constructor from a condensed vector.
  static FiniteMetricSpace from_condensed(std::size_t n, std::vector<double> rho,
                                          double tol = kDefaultTolerance,
                                          std::vector<std::string> labels = {});

  /// Skips validation. Only for constructions that preserve the axioms
  /// exactly (scaling, restriction, fixed closed-form spaces).
  static FiniteMetricSpace trusted(std::size_t n, std::vector<double> rho,
                                   std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return n_; }
  std::span<const double> rho() const noexcept { return rho_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  double distance(std::size_t i, std::size_t j) const {
    return i == j ? 0.0 : rho_[condensed_index(n_, i, j)];
  }

  Grid matrix() const;

  friend bool operator==(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
    return a.n_ == b.n_ && a.rho_ == b.rho_;
  }

 private:
  FiniteMetricSpace(std::size_t n, std::vector<double> rho, std::vector<std::string> labels)
      : n_(n), rho_(std::move(rho)), labels_(std::move(labels)) {}

  std::size_t n_;
  std::vector<double> rho_;
  std::vector<std::string> labels_;
};

/// A nonempty set of point indices of one space. Holds a non-owning
/// reference to the space, which must outlive the subset.
class PointSubset {
 public:
  PointSubset(const FiniteMetricSpace& space, std::vector<std::size_t> indices);

  static PointSubset all(const FiniteMetricSpace& space);

  const FiniteMetricSpace& space() const noexcept { return *space_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }

 private:
  const FiniteMetricSpace* space_;
  std::vector<std::size_t> indices_;  // sorted, unique
};

/// Checks a square grid against the metric axioms and extracts the
/// condensed vector from its upper triangle.
FiniteMetricSpace validate(const Grid& matrix, double tol = kDefaultTolerance,
                           std::vector<std::string> labels = {});

/// First violated axiom of a condensed vector, or nullopt if it is a metric.
std::optional<Error> check_condensed(std::size_t n, std::span<const double> rho,
                                     double tol = kDefaultTolerance);

double diameter(const FiniteMetricSpace& x);

FiniteMetricSpace scale(const FiniteMetricSpace& x, double lambda);

/// t * Delta_n: n points pairwise at distance t. simplex(1, t) is the
/// one-point space for every t.
FiniteMetricSpace simplex(std::size_t n, double t);

/// The smallest and second smallest entries of the multiset of distances.
/// Throws TooFewPoints when n < 3 (the second value does not exist).
std::pair<double, double> smallest_two(const FiniteMetricSpace& x);

/// The smallest nonzero distance. Throws TooFewPoints when n < 2.
double smallest_distance(const FiniteMetricSpace& x);

FiniteMetricSpace restrict_to(const FiniteMetricSpace& x, const PointSubset& s);

/// inf / sup of |ab| over a in A, b in B.
double set_distance_inf(const PointSubset& a, const PointSubset& b);
double set_distance_sup(const PointSubset& a, const PointSubset& b);

double hausdorff(const PointSubset& a, const PointSubset& b);

/// Points equidistant from p and q, or nullopt when there are none.
std::optional<PointSubset> mid_set(const FiniteMetricSpace& x, std::size_t p, std::size_t q,
                                   double tol = kDefaultTolerance);

/// Farthest-point greedy epsilon-net seeded at point 0.
PointSubset greedy_eps_net(const FiniteMetricSpace& x, double eps);

}  // namespace ghlab
