#include "ghlab/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ghlab {

std::pair<std::size_t, std::size_t> condensed_pair(std::size_t n, std::size_t index) {
  std::size_t i = 0;
  std::size_t row = n - 1;
  while (index >= row) {
    index -= row;
    ++i;
    --row;
  }
  return {i, i + 1 + index};
}

std::optional<Error> check_condensed(std::size_t n, std::span<const double> rho, double tol) {
  if (n == 0) return Error(ErrorKind::EmptySpace, "a metric space needs at least one point");
  if (rho.size() != pair_count(n)) {
    return Error(ErrorKind::DimensionMismatch,
                 "expected " + std::to_string(pair_count(n)) + " distances, got " +
                     std::to_string(rho.size()));
  }
  for (std::size_t e = 0; e < rho.size(); ++e) {
    auto [i, j] = condensed_pair(n, e);
    if (!std::isfinite(rho[e])) return Error(ErrorKind::NonFiniteEntry, "", {i, j});
    if (rho[e] <= 0.0) return Error(ErrorKind::NonpositiveDistance, "", {i, j});
  }
  auto d = [&](std::size_t a, std::size_t b) { return rho[condensed_index(n, a, b)]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (d(i, k) > d(i, j) + d(j, k) + tol) {
          return Error(ErrorKind::TriangleViolation,
                       "d(i,k) exceeds d(i,j) + d(j,k)", {i, j, k});
        }
      }
    }
  }
  return std::nullopt;
}

FiniteMetricSpace FiniteMetricSpace::from_condensed(std::size_t n, std::vector<double> rho,
                                                    double tol,
                                                    std::vector<std::string> labels) {
  if (auto err = check_condensed(n, rho, tol)) throw *err;
  if (!labels.empty() && labels.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "label count differs from point count");
  }
  return FiniteMetricSpace(n, std::move(rho), std::move(labels));
}

FiniteMetricSpace FiniteMetricSpace::trusted(std::size_t n, std::vector<double> rho,
                                             std::vector<std::string> labels) {
  return FiniteMetricSpace(n, std::move(rho), std::move(labels));
}

Grid FiniteMetricSpace::matrix() const {
  Grid m(n_, std::vector<double>(n_, 0.0));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m[i][j] = distance(i, j);
  return m;
}

PointSubset::PointSubset(const FiniteMetricSpace& space, std::vector<std::size_t> indices)
    : space_(&space), indices_(std::move(indices)) {
  if (indices_.empty()) throw Error(ErrorKind::EmptySubset, "a point subset must be nonempty");
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (indices_.back() >= space.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "", {indices_.back()});
  }
}

PointSubset PointSubset::all(const FiniteMetricSpace& space) {
  std::vector<std::size_t> idx(space.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return PointSubset(space, std::move(idx));
}

FiniteMetricSpace validate(const Grid& matrix, double tol, std::vector<std::string> labels) {
  const std::size_t n = matrix.size();
  if (n == 0) throw Error(ErrorKind::EmptySpace, "empty matrix");
  for (const auto& row : matrix) {
    if (row.size() != n) throw Error(ErrorKind::NotSquare, "rows must have length " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!std::isfinite(matrix[i][j])) throw Error(ErrorKind::NonFiniteEntry, "", {i, j});
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(matrix[i][i]) > tol) throw Error(ErrorKind::NonzeroDiagonal, "", {i});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(matrix[i][j] - matrix[j][i]) > tol)
        throw Error(ErrorKind::AsymmetricEntry, "", {i, j});

  std::vector<double> rho;
  rho.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) rho.push_back(matrix[i][j]);
  return FiniteMetricSpace::from_condensed(n, std::move(rho), tol, std::move(labels));
}

double diameter(const FiniteMetricSpace& x) {
  auto rho = x.rho();
  return rho.empty() ? 0.0 : *std::max_element(rho.begin(), rho.end());
}

FiniteMetricSpace scale(const FiniteMetricSpace& x, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorKind::NonpositiveScale, "scale factor must be positive");
  }
  std::vector<double> rho(x.rho().begin(), x.rho().end());
  for (double& r : rho) r *= lambda;
  return FiniteMetricSpace::trusted(x.size(), std::move(rho), x.labels());
}

FiniteMetricSpace simplex(std::size_t n, double t) {
  if (n == 0) throw Error(ErrorKind::EmptySpace, "simplex needs at least one point");
  if (!(t > 0.0) || !std::isfinite(t)) throw Error(ErrorKind::NonpositiveScale, "simplex edge must be positive");
  return FiniteMetricSpace::trusted(n, std::vector<double>(pair_count(n), t));
}

std::pair<double, double> smallest_two(const FiniteMetricSpace& x) {
  if (x.rho().size() < 2) {
    throw Error(ErrorKind::TooFewPoints, "two smallest distances need at least three points");
  }
  std::vector<double> r(x.rho().begin(), x.rho().end());
  std::partial_sort(r.begin(), r.begin() + 2, r.end());
  return {r[0], r[1]};
}

double smallest_distance(const FiniteMetricSpace& x) {
  auto rho = x.rho();
  if (rho.empty()) throw Error(ErrorKind::TooFewPoints, "smallest distance needs two points");
  return *std::min_element(rho.begin(), rho.end());
}

FiniteMetricSpace restrict_to(const FiniteMetricSpace& x, const PointSubset& s) {
  if (&s.space() != &x) throw Error(ErrorKind::MixedSpaces, "subset belongs to another space");
  const auto& idx = s.indices();
  std::vector<double> rho;
  rho.reserve(pair_count(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) rho.push_back(x.distance(idx[a], idx[b]));
  std::vector<std::string> labels;
  if (!x.labels().empty())
    for (auto i : idx) labels.push_back(x.labels()[i]);
  return FiniteMetricSpace::trusted(idx.size(), std::move(rho), std::move(labels));
}

namespace {

void require_same_space(const PointSubset& a, const PointSubset& b) {
  if (&a.space() != &b.space()) throw Error(ErrorKind::MixedSpaces, "subsets of different spaces");
}

// |pB| = min over b in B of |pb|
double point_to_set(const FiniteMetricSpace& x, std::size_t p, const PointSubset& b) {
  double best = std::numeric_limits<double>::infinity();
  for (auto j : b.indices()) best = std::min(best, x.distance(p, j));
  return best;
}

}  // namespace

double set_distance_inf(const PointSubset& a, const PointSubset& b) {
  require_same_space(a, b);
  double best = std::numeric_limits<double>::infinity();
  for (auto i : a.indices()) best = std::min(best, point_to_set(a.space(), i, b));
  return best;
}

double set_distance_sup(const PointSubset& a, const PointSubset& b) {
  require_same_space(a, b);
  double best = 0.0;
  for (auto i : a.indices())
    for (auto j : b.indices()) best = std::max(best, a.space().distance(i, j));
  return best;
}

double hausdorff(const PointSubset& a, const PointSubset& b) {
  require_same_space(a, b);
  double h = 0.0;
  for (auto i : a.indices()) h = std::max(h, point_to_set(a.space(), i, b));
  for (auto j : b.indices()) h = std::max(h, point_to_set(a.space(), j, a));
  return h;
}

std::optional<PointSubset> mid_set(const FiniteMetricSpace& x, std::size_t p, std::size_t q,
                                   double tol) {
  if (p >= x.size() || q >= x.size()) throw Error(ErrorKind::IndexOutOfRange, "", {std::max(p, q)});
  if (p == q) throw Error(ErrorKind::SamePoint, "mid set needs two distinct points", {p});
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::abs(x.distance(i, p) - x.distance(i, q)) <= tol) out.push_back(i);
  if (out.empty()) return std::nullopt;
  return PointSubset(x, std::move(out));
}

PointSubset greedy_eps_net(const FiniteMetricSpace& x, double eps) {
  if (!(eps > 0.0)) throw Error(ErrorKind::BadArgument, "epsilon must be positive");
  std::vector<std::size_t> net{0};
  std::vector<double> gap(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) gap[i] = x.distance(i, 0);
  for (;;) {
    auto far = static_cast<std::size_t>(std::max_element(gap.begin(), gap.end()) - gap.begin());
    if (gap[far] <= eps) break;
    net.push_back(far);
    for (std::size_t i = 0; i < x.size(); ++i) gap[i] = std::min(gap[i], x.distance(i, far));
  }
  return PointSubset(x, std::move(net));
}

}  // namespace ghlab
