#include "ghlab/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ghlab/gh_solver.hpp"

namespace ghlab {

SimplexSpec::SimplexSpec(std::size_t n_, double t_) : n(n_), t(t_) {
  if (n == 0) throw Error(ErrorKind::BadArgument, "simplex needs at least one point");
  if (!(t > 0.0) || !std::isfinite(t)) throw Error(ErrorKind::BadArgument, "simplex edge must be positive");
}

double dis_partition_simplex(const FiniteMetricSpace& x, double t, const Partition& d) {
  if (d.ground_size() != x.size()) throw Error(ErrorKind::DimensionMismatch, "partition is not of this space");
  return std::max({partition_diameter(x, d), t - partition_alpha(x, d), partition_beta(x, d) - t});
}

double gh_to_simplex_enum(const SimplexSpec& spec, const FiniteMetricSpace& x) {
  if (spec.n > x.size()) {
    throw Error(ErrorKind::TooManySimplexPoints,
                "simplex has " + std::to_string(spec.n) + " points, space only " + std::to_string(x.size()));
  }
  double best = std::numeric_limits<double>::infinity();
  for_each_partition(x.size(), spec.n, [&](const Partition& d) {
    best = std::min(best, dis_partition_simplex(x, spec.t, d));
    return true;
  });
  return 0.5 * best;
}

std::string_view to_string(SimplexCase c) {
  switch (c) {
    case SimplexCase::FewerPoints: return "m<n";
    case SimplexCase::EqualPoints: return "m=n";
    case SimplexCase::OneMorePoint: return "m=n+1";
    case SimplexCase::LargeDiameter: return "diam>=2t";
    case SimplexCase::Enumeration: return "enumeration";
  }
  return "unknown";
}

std::vector<CaseValue> simplex_case_values(const SimplexSpec& spec, const FiniteMetricSpace& x) {
  const std::size_t m = x.size();
  const std::size_t n = spec.n;
  const double t = spec.t;
  const double diam = diameter(x);
  std::vector<CaseValue> out;
  if (m < n) out.push_back({SimplexCase::FewerPoints, 0.5 * std::max(t, diam - t)});
  if (m == n && n >= 2) {
    double a = smallest_distance(x);
    out.push_back({SimplexCase::EqualPoints, 0.5 * std::max(t - a, diam - t)});
  }
  if (m == n + 1 && m >= 3) {
    auto [a, b] = smallest_two(x);
    out.push_back({SimplexCase::OneMorePoint, 0.5 * std::max({a, t - b, diam - t})});
  }
  if (m >= n && diam >= 2.0 * t) {
    double dn = min_diameter_partition(x, n).value;
    out.push_back({SimplexCase::LargeDiameter, 0.5 * std::max(dn, diam - t)});
  }
  return out;
}

SimplexClosedForm gh_to_simplex_closed(const SimplexSpec& spec, const FiniteMetricSpace& x) {
  auto cases = simplex_case_values(spec, x);
  if (cases.empty()) return {gh_to_simplex_enum(spec, x), SimplexCase::Enumeration};
  return {cases.front().distance, cases.front().which};
}

double gh_simplex_simplex(double t, std::size_t p, double s, std::size_t q) {
  if (p == 0 || q == 0) throw Error(ErrorKind::BadArgument, "simplex needs at least one point");
  if (!(t > 0.0) || !(s > 0.0)) throw Error(ErrorKind::BadArgument, "simplex edges must be positive");
  if (p == 1 && q == 1) return 0.0;
  if (p == 1) return 0.5 * s;
  if (q == 1) return 0.5 * t;
  double twice;
  if (p == q) {
    twice = std::abs(t - s);
  } else if (p > q) {
    twice = std::max(t, s - t);
  } else {
    twice = std::max(s, t - s);
  }
  if (p != q && twice < std::min(t, s)) {
    throw std::logic_error("simplex distance below min{t, s} for different sizes");
  }
  return 0.5 * twice;
}

bool contains_simplex(const FiniteMetricSpace& x, double t, std::size_t n, double tol) {
  if (n <= 1) return n <= x.size();
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (chosen.size() == n) return true;
    for (std::size_t i = from; i < x.size(); ++i) {
      bool ok = std::all_of(chosen.begin(), chosen.end(),
                            [&](std::size_t c) { return std::abs(x.distance(i, c) - t) <= tol; });
      if (!ok) continue;
      chosen.push_back(i);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

SubsimplexBound subsimplex_bound_check(const FiniteMetricSpace& x, const FiniteMetricSpace& m,
                                       double t, std::size_t n, double tol) {
  if (n < 2 || !(t > 0.0)) throw Error(ErrorKind::HypothesisUnmet, "need n >= 2 and t > 0");
  if (m.size() + 1 > n) {
    throw Error(ErrorKind::HypothesisUnmet, "#M must be at most n - 1");
  }
  if (!contains_simplex(x, t, n, tol)) {
    throw Error(ErrorKind::HypothesisUnmet, "X has no n points pairwise at distance t");
  }
  SubsimplexBound r;
  r.bound = 0.5 * t;
  r.exact = gh_exact(x, m).distance;
  r.tight = std::abs(diameter(x) - t) <= tol && diameter(m) <= t + tol;
  r.holds = r.exact >= r.bound - tol && (!r.tight || std::abs(r.exact - r.bound) <= tol);
  return r;
}

bool bn_member(const FiniteMetricSpace& b, std::size_t n, double t, double tol) {
  if (n < 2 || !(t > 0.0)) throw Error(ErrorKind::BadArgument, "need n >= 2 and t > 0");
  if (diameter(b) < 2.0 * t - tol) return false;
  const double to_point = gh_exact(simplex(1, 1.0), b).distance;
  const double to_simplex = gh_exact(simplex(n, t), b).distance;
  return std::abs(to_point - to_simplex) <= tol;
}

FiniteMetricSpace spider_space(std::size_t m, double mu) {
  if (m < 2) throw Error(ErrorKind::BadArgument, "spider space needs m >= 2");
  if (!(mu > 0.0) || !std::isfinite(mu)) throw Error(ErrorKind::BadArgument, "mu must be positive");
  const std::size_t n = 2 * m;
  std::vector<double> rho(pair_count(n), 0.5 * mu);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) rho[condensed_index(n, i, j)] = mu;
  return FiniteMetricSpace::from_condensed(n, std::move(rho));
}

}  // namespace ghlab
