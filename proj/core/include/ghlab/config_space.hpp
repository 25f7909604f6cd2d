#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ghlab/metric_space.hpp"
#include "ghlab/permutation.hpp"

namespace ghlab {

/// A point of R^N, N = n(n-1)/2, with coordinates indexed like the
/// condensed distance vector. Membership in the metric cone C_n is checked
/// separately (see in_cone), the type only fixes the dimension.
class DistVector {
 public:
  DistVector(std::size_t n, std::vector<double> coords);

  std::size_t points() const noexcept { return n_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<double>& coords() const noexcept { return coords_; }
  double operator[](std::size_t e) const { return coords_[e]; }
  double at(std::size_t i, std::size_t j) const { return coords_[condensed_index(n_, i, j)]; }

  friend bool operator==(const DistVector&, const DistVector&) = default;
  friend auto operator<=>(const DistVector&, const DistVector&) = default;

 private:
  std::size_t n_;
  std::vector<double> coords_;
};

inline constexpr std::size_t kMaxGroupPoints = 8;

DistVector to_rho(const FiniteMetricSpace& x);

/// Throws NonpositiveCoordinate or NotInCone(i,j,k) when rho_ik > rho_ij + rho_jk.
FiniteMetricSpace from_rho(const DistVector& rho, double tol = kDefaultTolerance);

bool in_cone(const DistVector& rho, double tol = kDefaultTolerance);

/// Half the largest coordinate difference.
double linf_distance(const DistVector& a, const DistVector& b);

/// Relabelling by sigma: the result's coordinate at {i,j} is rho at
/// {sigma(i), sigma(j)}. apply_perm(apply_perm(r, s), u) == apply_perm(r, s.after(u)).
DistVector apply_perm(const DistVector& rho, const Permutation& sigma);

/// All images under S_n, deduplicated within tol, sorted lexicographically.
std::vector<DistVector> orbit(const DistVector& rho, double tol = kDefaultTolerance);

/// Vertex permutations fixing rho within tol, in lexicographic order.
std::vector<Permutation> stabilizer(const DistVector& rho, double tol = kDefaultTolerance);

struct ClassificationReport {
  bool regular = false;
  bool degenerate = false;
  bool generic = false;
  std::vector<Permutation> stabilizer;
  std::vector<std::array<std::size_t, 3>> degenerate_triples;  // ordered (i,j,k), 0-based
};

/// Ordered triples of distinct indices with rho_ij + rho_jk = rho_ik within tol.
std::vector<std::array<std::size_t, 3>> degenerate_triples(const DistVector& rho,
                                                           double tol = kDefaultTolerance);

ClassificationReport classify(const DistVector& rho, double tol = kDefaultTolerance);

/// The half-space rho'_ij + rho'_jk - rho'_ik >= 0.
struct HalfSpace {
  std::array<std::size_t, 3> triple;
  std::vector<double> normal;  // +1 at ij and jk, -1 at ik

  double value(const DistVector& p) const;
  bool contains(const DistVector& p, double tol = 0.0) const { return value(p) >= -tol; }
};

/// Constraints cutting out the tangent cone T(rho); empty means all of R^N.
std::vector<HalfSpace> degeneracy_cone(const DistVector& rho, double tol = kDefaultTolerance);

struct QuotientResult {
  double distance = 0.0;
  Permutation sigma;  // lexicographically first minimiser
};

/// min over sigma in S_n of linf_distance(a, apply_perm(b, sigma)).
QuotientResult quotient_distance(const DistVector& a, const DistVector& b);

struct LocalIsometryReport {
  double quotient = 0.0;
  double exact = 0.0;
  bool agree = false;
};

/// Compares the orbit distance of the distance vectors with the exact
/// Gromov-Hausdorff distance. Agreement is expected only for spaces close
/// to a common space; disagreement is reported, not raised.
LocalIsometryReport local_isometry_check(const FiniteMetricSpace& y, const FiniteMetricSpace& z,
                                         double tol = kDefaultTolerance);

/// min over ordered triples of rho_ij + rho_jk - rho_ik (+inf when n < 3).
double triangle_slack(const DistVector& rho);

/// min linf distance from rho to its distinct orbit points (+inf if none).
double orbit_separation(const DistVector& rho);

/// 1/4 * min{triangle_slack, orbit_separation / 2}.
double local_margin(const DistVector& rho);

}  // namespace ghlab
