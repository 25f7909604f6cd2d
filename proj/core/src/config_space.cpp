#include "ghlab/config_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ghlab/gh_solver.hpp"

namespace ghlab {

namespace {

void require_group_size(std::size_t n) {
  if (n > kMaxGroupPoints) {
    throw Error(ErrorKind::TooLarge, "symmetric group enumeration limited to n <= " +
                                         std::to_string(kMaxGroupPoints));
  }
}

double max_abs_diff(const DistVector& a, const DistVector& b) {
  double d = 0.0;
  for (std::size_t e = 0; e < a.dim(); ++e) d = std::max(d, std::abs(a[e] - b[e]));
  return d;
}

}  // namespace

DistVector::DistVector(std::size_t n, std::vector<double> coords) : n_(n), coords_(std::move(coords)) {
  if (coords_.size() != pair_count(n)) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(pair_count(n)) + " coordinates");
  }
}

DistVector to_rho(const FiniteMetricSpace& x) {
  return DistVector(x.size(), std::vector<double>(x.rho().begin(), x.rho().end()));
}

FiniteMetricSpace from_rho(const DistVector& rho, double tol) {
  if (auto err = check_condensed(rho.points(), rho.coords(), tol)) {
    switch (err->kind()) {
      case ErrorKind::NonpositiveDistance:
        throw Error(ErrorKind::NonpositiveCoordinate, "", err->indices());
      case ErrorKind::TriangleViolation:
        throw Error(ErrorKind::NotInCone, "rho_ik > rho_ij + rho_jk", err->indices());
      default:
        throw *err;
    }
  }
  return FiniteMetricSpace::trusted(rho.points(), rho.coords());
}

bool in_cone(const DistVector& rho, double tol) {
  return rho.points() > 0 && !check_condensed(rho.points(), rho.coords(), tol);
}

double linf_distance(const DistVector& a, const DistVector& b) {
  if (a.points() != b.points()) throw Error(ErrorKind::DimensionMismatch, "vectors of different dimension");
  return 0.5 * max_abs_diff(a, b);
}

DistVector apply_perm(const DistVector& rho, const Permutation& sigma) {
  const std::size_t n = rho.points();
  if (sigma.size() != n) throw Error(ErrorKind::BadPermutation, "permutation size differs from point count");
  std::vector<double> out(rho.dim());
  for (std::size_t e = 0; e < rho.dim(); ++e) {
    auto [i, j] = condensed_pair(n, e);
    out[e] = rho.at(sigma(i), sigma(j));
  }
  return DistVector(n, std::move(out));
}

std::vector<DistVector> orbit(const DistVector& rho, double tol) {
  require_group_size(rho.points());
  std::vector<DistVector> images;
  images.reserve(factorial(rho.points()));
  for_each_permutation(rho.points(), [&](const Permutation& s) {
    images.push_back(apply_perm(rho, s));
    return true;
  });
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  if (rho.dim() == 0) return images;

  // Images are sorted by first coordinate, so a near-duplicate of a kept
  // vector lies among the kept vectors whose first coordinate is within tol.
  std::vector<DistVector> kept;
  for (auto& v : images) {
    bool dup = false;
    for (auto it = kept.rbegin(); it != kept.rend() && v[0] - (*it)[0] <= tol; ++it) {
      if (max_abs_diff(v, *it) <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(std::move(v));
  }
  return kept;
}

std::vector<Permutation> stabilizer(const DistVector& rho, double tol) {
  require_group_size(rho.points());
  std::vector<Permutation> out;
  for_each_permutation(rho.points(), [&](const Permutation& s) {
    if (max_abs_diff(apply_perm(rho, s), rho) <= tol) out.push_back(s);
    return true;
  });
  return out;
}

std::vector<std::array<std::size_t, 3>> degenerate_triples(const DistVector& rho, double tol) {
  const std::size_t n = rho.points();
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (std::abs(rho.at(i, j) + rho.at(j, k) - rho.at(i, k)) <= tol) out.push_back({i, j, k});
      }
  return out;
}

ClassificationReport classify(const DistVector& rho, double tol) {
  from_rho(rho, tol);  // NotInCone / NonpositiveCoordinate
  ClassificationReport r;
  r.stabilizer = stabilizer(rho, tol);
  r.degenerate_triples = degenerate_triples(rho, tol);
  r.regular = r.stabilizer.size() == 1;
  r.degenerate = !r.degenerate_triples.empty();
  r.generic = r.regular && !r.degenerate;
  return r;
}

double HalfSpace::value(const DistVector& p) const {
  double v = 0.0;
  for (std::size_t e = 0; e < normal.size(); ++e) v += normal[e] * p[e];
  return v;
}

std::vector<HalfSpace> degeneracy_cone(const DistVector& rho, double tol) {
  from_rho(rho, tol);
  std::vector<HalfSpace> out;
  const std::size_t n = rho.points();
  for (const auto& t : degenerate_triples(rho, tol)) {
    HalfSpace h{t, std::vector<double>(rho.dim(), 0.0)};
    h.normal[condensed_index(n, t[0], t[1])] += 1.0;
    h.normal[condensed_index(n, t[1], t[2])] += 1.0;
    h.normal[condensed_index(n, t[0], t[2])] -= 1.0;
    out.push_back(std::move(h));
  }
  return out;
}

QuotientResult quotient_distance(const DistVector& a, const DistVector& b) {
  if (a.points() != b.points()) throw Error(ErrorKind::DimensionMismatch, "vectors of different dimension");
  require_group_size(a.points());
  QuotientResult best{std::numeric_limits<double>::infinity(), Permutation::identity(a.points())};
  for_each_permutation(a.points(), [&](const Permutation& s) {
    double d = linf_distance(a, apply_perm(b, s));
    if (d < best.distance) best = {d, s};
    return true;
  });
  return best;
}

LocalIsometryReport local_isometry_check(const FiniteMetricSpace& y, const FiniteMetricSpace& z,
                                         double tol) {
  if (y.size() != z.size()) throw Error(ErrorKind::CardinalityMismatch, "spaces differ in size");
  if (y.size() > 6) throw Error(ErrorKind::TooLarge, "local isometry check limited to 6 points");
  LocalIsometryReport r;
  r.quotient = quotient_distance(to_rho(y), to_rho(z)).distance;
  r.exact = gh_exact(y, z).distance;
  r.agree = std::abs(r.quotient - r.exact) <= tol;
  return r;
}

double triangle_slack(const DistVector& rho) {
  const std::size_t n = rho.points();
  double s = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (i != j && j != k && i != k) s = std::min(s, rho.at(i, j) + rho.at(j, k) - rho.at(i, k));
  return s;
}

double orbit_separation(const DistVector& rho) {
  require_group_size(rho.points());
  double s = std::numeric_limits<double>::infinity();
  for_each_permutation(rho.points(), [&](const Permutation& p) {
    auto img = apply_perm(rho, p);
    if (img != rho) s = std::min(s, linf_distance(rho, img));
    return true;
  });
  return s;
}

double local_margin(const DistVector& rho) {
  return 0.25 * std::min(triangle_slack(rho), 0.5 * orbit_separation(rho));
}

}  // namespace ghlab
