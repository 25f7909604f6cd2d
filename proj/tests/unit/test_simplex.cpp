#include <doctest.h>

#include <cmath>

#include "ghlab/correspondence.hpp"
#include "ghlab/gh_solver.hpp"
#include "ghlab/simplex.hpp"
#include "oracles.hpp"

using namespace ghlab;

namespace {

// R_D as an explicit relation: simplex point i is paired with every point of block i.
Relation partition_relation(const FiniteMetricSpace& x, const Partition& d) {
  std::vector<IndexPair> pairs;
  for (std::size_t i = 0; i < d.block_count(); ++i)
    for (auto p : d.blocks()[i]) pairs.emplace_back(i, p);
  return Relation(d.block_count(), x.size(), pairs);
}

std::vector<double> t_grid(double diam) {
  std::vector<double> out;
  for (int i = 1; i <= 10; ++i) out.push_back(0.2 * i * diam);
  return out;
}

}  // namespace

TEST_CASE("SimplexSpec validation") {
  CHECK_THROWS_AS(SimplexSpec(0, 1.0), Error);
  CHECK_THROWS_AS(SimplexSpec(2, 0.0), Error);
  CHECK_THROWS_AS(SimplexSpec(2, -1.0), Error);
  CHECK(SimplexSpec(3, 2.0).space() == simplex(3, 2.0));
}

TEST_CASE("dis_partition_simplex examples") {
  auto line = oracle::line_space({0, 1, 10});
  Partition d(3, {{0, 1}, {2}});
  CHECK(dis_partition_simplex(line, 5.0, d) == 5.0);
  CHECK(dis_partition_simplex(line, 5.0, Partition(3, {{0}, {1, 2}})) == 9.0);
  CHECK(dis_partition_simplex(line, 5.0, Partition(3, {{0, 1, 2}})) == 10.0);

  auto s = simplex(4, 3.0);
  auto singles = Partition::singletons(4);
  CHECK(dis_partition_simplex(s, 1.0, singles) == 2.0);
  CHECK(dis_partition_simplex(s, 4.5, singles) == 1.5);
  CHECK(dis_partition_simplex(s, 3.0, singles) == 0.0);
}

TEST_CASE("dis_partition_simplex equals the distortion of R_D") {
  Rng rng(31);
  for (int i = 0; i < 25; ++i) {
    auto x = oracle::random_sized(rng, 1, 5);
    double t = rng.uniform(0.05, 2.0);
    for (std::size_t k = 1; k <= x.size(); ++k) {
      for_each_partition(x.size(), k, [&](const Partition& d) {
        CHECK(dis_partition_simplex(x, t, d) == distortion(simplex(k, t), x, partition_relation(x, d)));
        return true;
      });
    }
  }
}

TEST_CASE("gh_to_simplex_enum") {
  auto line = oracle::line_space({0, 1, 10});
  CHECK(gh_to_simplex_enum({2, 5.0}, line) == 2.5);
  CHECK_THROWS_AS(gh_to_simplex_enum({4, 1.0}, line), Error);
  CHECK(gh_to_simplex_enum({4, 3.0}, simplex(4, 2.0)) == 0.5);

  Rng rng(32);
  for (int i = 0; i < 25; ++i) {
    auto x = oracle::random_sized(rng, 1, 5);
    for (std::size_t n = 1; n <= x.size(); ++n) {
      double t = rng.uniform(0.05, 2.5);
      CHECK(gh_to_simplex_enum({n, t}, x) == gh_exact(simplex(n, t), x).distance);
    }
  }
}

TEST_CASE("gh_to_simplex_closed examples") {
  auto two = simplex(2, 5.0);
  auto r = gh_to_simplex_closed({3, 1.0}, two);
  CHECK(r.distance == 2.0);
  CHECK(r.used == SimplexCase::FewerPoints);

  auto line = oracle::line_space({0, 1, 10});
  r = gh_to_simplex_closed({2, 5.0}, line);
  CHECK(r.distance == 2.5);
  CHECK(r.used == SimplexCase::OneMorePoint);

  r = gh_to_simplex_closed({4, 2.0}, simplex(4, 3.0));
  CHECK(r.distance == 0.5);
  CHECK(r.used == SimplexCase::EqualPoints);

  // line 0,1,10 with n = 1: only the d_n case applies once diam >= 2t
  r = gh_to_simplex_closed({1, 2.0}, line);
  CHECK(r.used == SimplexCase::LargeDiameter);
  CHECK(r.distance == 5.0);

  r = gh_to_simplex_closed({2, 1.0}, oracle::line_space({0, 1, 2, 3}));
  CHECK(r.used == SimplexCase::LargeDiameter);
  CHECK(r.distance == gh_to_simplex_enum({2, 1.0}, oracle::line_space({0, 1, 2, 3})));

  r = gh_to_simplex_closed({2, 5.0}, oracle::line_space({0, 1, 2, 3}));
  CHECK(r.used == SimplexCase::Enumeration);

  CHECK(to_string(SimplexCase::FewerPoints) == "m<n");
}

TEST_CASE("closed form, enumeration and solver agree (m <= 6)") {
  Rng rng(33);
  for (int i = 0; i < 40; ++i) {
    auto x = oracle::random_sized(rng, 1, 6);
    for (std::size_t n = 1; n <= x.size() + 1; ++n) {
      for (double t : t_grid(diameter(x) > 0 ? diameter(x) : 1.0)) {
        SimplexSpec spec(n, t);
        double solver = gh_exact(spec.space(), x).distance;
        auto closed = gh_to_simplex_closed(spec, x);
        CHECK(closed.distance == doctest::Approx(solver).epsilon(1e-12));
        if (n <= x.size()) CHECK(gh_to_simplex_enum(spec, x) == solver);
        for (const auto& c : simplex_case_values(spec, x)) CHECK(c.distance == doctest::Approx(solver).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("overlapping case guards agree (m <= 7)") {
  Rng rng(34);
  int overlaps = 0;
  for (int i = 0; i < 60; ++i) {
    auto x = oracle::random_sized(rng, 2, 7);
    for (std::size_t n = 1; n <= x.size(); ++n) {
      for (double t : t_grid(diameter(x))) {
        auto values = simplex_case_values({n, t}, x);
        if (values.size() < 2) continue;
        ++overlaps;
        for (const auto& v : values) CHECK(std::abs(v.distance - values.front().distance) <= 1e-12);
      }
    }
  }
  CHECK(overlaps > 0);
}

TEST_CASE("gh_simplex_simplex") {
  CHECK(gh_simplex_simplex(2, 5, 3, 5) == 0.5);
  CHECK(gh_simplex_simplex(1, 3, 1, 4) == 0.5);
  CHECK(gh_simplex_simplex(1, 3, 1, 3) == 0.0);
  CHECK(gh_simplex_simplex(1, 1, 4, 3) == 2.0);
  CHECK(gh_simplex_simplex(4, 3, 7, 1) == 2.0);
  const double grid[] = {0.5, 1.0, 1.5, 2.0, 3.0};
  for (std::size_t p = 1; p <= 5; ++p)
    for (std::size_t q = 1; q <= 5; ++q)
      for (double t : grid)
        for (double s : grid) {
          double v = gh_simplex_simplex(t, p, s, q);
          CHECK(v == gh_exact(simplex(p, t), simplex(q, s)).distance);
          if (p != q && p > 1 && q > 1) CHECK(v >= 0.5 * std::min(t, s));
        }
}

TEST_CASE("subsimplex bound") {
  auto r = subsimplex_bound_check(simplex(4, 1.0), simplex(3, 1.0), 1.0, 4);
  CHECK(r.bound == 0.5);
  CHECK(r.tight);
  CHECK(r.exact == 0.5);
  CHECK(r.holds);

  r = subsimplex_bound_check(simplex(3, 1.0), simplex(2, 1.0), 1.0, 3);
  CHECK(r.tight);
  CHECK(r.exact == 0.5);

  // three points at distance 1 and a fourth at distance 3
  auto far = FiniteMetricSpace::from_condensed(4, {1, 1, 3, 1, 3, 3});
  r = subsimplex_bound_check(far, simplex(2, 1.0), 1.0, 3);
  CHECK_FALSE(r.tight);
  CHECK(r.exact >= 0.5);
  CHECK(r.holds);

  CHECK_THROWS_AS(subsimplex_bound_check(far, simplex(3, 1.0), 1.0, 3), Error);
  CHECK_THROWS_AS(subsimplex_bound_check(far, simplex(2, 1.0), 1.0, 4), Error);
  CHECK_THROWS_AS(subsimplex_bound_check(far, simplex(2, 1.0), 2.0, 3), Error);

  CHECK(contains_simplex(far, 1.0, 3));
  CHECK(contains_simplex(far, 3.0, 2));
  CHECK_FALSE(contains_simplex(far, 3.0, 3));

  Rng rng(35);
  for (int i = 0; i < 30; ++i) {
    auto m = oracle::random_sized(rng, 1, 3);
    double t = rng.uniform(0.5, 2.0);
    auto base = simplex(4, t);
    auto res = subsimplex_bound_check(base, m, t, 4);
    CHECK(res.holds);
  }
}

TEST_CASE("B_n(t) membership") {
  CHECK(bn_member(simplex(5, 3.0), 3, 1.0));
  CHECK(bn_member(simplex(4, 2.0), 2, 1.0));
  CHECK_FALSE(bn_member(simplex(5, 1.5), 3, 1.0));
  CHECK_FALSE(bn_member(simplex(3, 3.0), 3, 1.0));

  Rng rng(36);
  int members = 0;
  for (int i = 0; i < 300; ++i) {
    auto b = oracle::two_distance_space(rng, 2 + rng.below(5));
    std::size_t n = 2 + rng.below(3);
    double t = rng.uniform(0.3, 1.1);
    if (!bn_member(b, n, t)) continue;
    ++members;
    CHECK(b.size() > n);
    CHECK(min_diameter_partition(b, n).value == diameter(b));
    for (std::size_t a = 1; a <= n; ++a) {
      CHECK(gh_exact(simplex(a, t), b).distance == 0.5 * diameter(b));
    }
    auto line = oracle::line_space({0.0, 0.4 * t, t});
    if (line.size() <= n) CHECK(gh_exact(line, b).distance == 0.5 * diameter(b));
  }
  CHECK(members > 0);
}

TEST_CASE("spider space") {
  for (std::size_t m = 2; m <= 4; ++m) {
    auto b = spider_space(m, 2.0);
    CHECK(b.size() == 2 * m);
    CHECK(diameter(b) == 2.0);
    for (std::size_t n = 1; n < m; ++n) {
      CHECK(min_diameter_partition(b, n).value == 2.0);
      if (n >= 2) {
        CHECK(bn_member(b, n, 1.0));
        CHECK(bn_member(b, n, 0.7));
      }
    }
  }
}
