#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "ghlab/metric_space.hpp"
#include "ghlab/partition.hpp"

namespace ghlab {

/// t * Delta_n.
struct SimplexSpec {
  std::size_t n = 1;
  double t = 1.0;

  SimplexSpec() = default;
  /// Throws BadArgument unless n >= 1 and t > 0.
  SimplexSpec(std::size_t n, double t);

  FiniteMetricSpace space() const { return simplex(n, t); }
};

/// Distortion of R_D = union_i {i} x X_i between t*Delta_k and X, for a
/// k-block partition D of X:  max{diam D, t - alpha(D), beta(D) - t}.
double dis_partition_simplex(const FiniteMetricSpace& x, double t, const Partition& d);

/// d_GH(t*Delta_n, X) as half the minimum of dis_partition_simplex over
/// n-block partitions of X. Throws TooManySimplexPoints when n > #X.
double gh_to_simplex_enum(const SimplexSpec& spec, const FiniteMetricSpace& x);

enum class SimplexCase {
  FewerPoints,     // m < n
  EqualPoints,     // m = n >= 2
  OneMorePoint,    // m = n + 1 >= 3
  LargeDiameter,   // m >= n and diam X >= 2t
  Enumeration,     // no closed form applies
};

std::string_view to_string(SimplexCase c);

struct SimplexClosedForm {
  double distance = 0.0;
  SimplexCase used = SimplexCase::Enumeration;
};

/// Closed-form d_GH(t*Delta_n, X) in terms of m = #X, diam X, the two
/// smallest distances a <= b and d_n(X). The most specific applicable case
/// wins; when none applies the enumeration is used.
SimplexClosedForm gh_to_simplex_closed(const SimplexSpec& spec, const FiniteMetricSpace& x);

struct CaseValue {
  SimplexCase which;
  double distance;
};

/// Every closed-form case whose guard holds, each evaluated independently.
std::vector<CaseValue> simplex_case_values(const SimplexSpec& spec, const FiniteMetricSpace& x);

/// d_GH(t*Delta_p, s*Delta_q). Delegates to half the diameter when p or
/// q is 1.
double gh_simplex_simplex(double t, std::size_t p, double s, std::size_t q);

struct SubsimplexBound {
  double bound = 0.0;  // t / 2
  double exact = 0.0;  // d_GH(X, M)
  bool tight = false;  // diam X = t and diam M <= t, where equality must hold
  bool holds = false;  // exact >= bound, and exact == bound when tight
};

/// Lower bound d_GH(X, M) >= t/2 when X contains n points pairwise at
/// distance t and #M <= n - 1. Throws HypothesisUnmet otherwise.
SubsimplexBound subsimplex_bound_check(const FiniteMetricSpace& x, const FiniteMetricSpace& m,
                                       double t, std::size_t n, double tol = kDefaultTolerance);

/// True when some n points of X are pairwise at distance t (within tol).
bool contains_simplex(const FiniteMetricSpace& x, double t, std::size_t n,
                      double tol = kDefaultTolerance);

/// Membership of B in the set of spaces of diameter >= 2t equidistant from
/// the one-point space and t*Delta_n.
bool bn_member(const FiniteMetricSpace& b, std::size_t n, double t, double tol = kDefaultTolerance);

/// 2m points: the first m pairwise at distance mu, every other distance mu/2.
FiniteMetricSpace spider_space(std::size_t m, double mu);

}  // namespace ghlab
