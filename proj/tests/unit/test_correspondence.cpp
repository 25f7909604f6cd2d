#include <doctest.h>

#include "ghlab/correspondence.hpp"
#include "ghlab/permutation.hpp"
#include "oracles.hpp"

using namespace ghlab;

TEST_CASE("distortion") {
  Rng rng(1);
  auto x = random_space(4, {}, rng);
  auto y = random_space(3, {}, rng);
  CHECK(distortion(x, x, Relation::identity(4)) == 0.0);
  CHECK(distortion(x, y, Relation::product(4, 3)) == std::max(diameter(x), diameter(y)));
  CHECK_THROWS_AS(distortion(x, y, Relation(4, 3, {})), Error);

  // R_D between the line {0,1,10} and 5*Delta_2 for D = {{0,1},{10}}:
  // the pairs-of-pairs give |1-0|, |9-5|, |10-5| -> 5.
  auto line = oracle::line_space({0, 1, 10});
  Relation rd(3, 2, {{0, 0}, {1, 0}, {2, 1}});
  CHECK(distortion(line, simplex(2, 5.0), rd) == 5.0);
}

TEST_CASE("correspondence and irreducibility predicates") {
  CHECK(is_correspondence(Relation::identity(3)));
  CHECK_FALSE(is_correspondence(Relation(3, 2, {{0, 0}, {1, 1}})));
  CHECK(is_irreducible(Relation::identity(4)));
  CHECK_FALSE(is_irreducible(Relation::product(2, 2)));
  CHECK_FALSE(is_irreducible(Relation::product(3, 4)));
  CHECK(is_irreducible(Relation::product(1, 4)));

  for_each_permutation(4, [](const Permutation& p) {
    std::vector<IndexPair> pairs;
    for (std::size_t i = 0; i < 4; ++i) pairs.emplace_back(i, p(i));
    CHECK(is_irreducible(Relation(4, 4, pairs)));
    return true;
  });
}

// Irreducible iff no pair can be dropped: checked by literally dropping
// each pair and re-testing surjectivity.
static bool irreducible_by_removal(const Relation& r) {
  if (!is_correspondence(r)) return false;
  for (std::size_t s = 0; s < r.pairs().size(); ++s) {
    auto p = r.pairs();
    p.erase(p.begin() + static_cast<std::ptrdiff_t>(s));
    if (is_correspondence(Relation(r.left_size(), r.right_size(), p))) return false;
  }
  return true;
}

TEST_CASE("block expansion irreducible iff every matched pair has a one-point side") {
  Rng rng(2);
  for (std::size_t p = 1; p <= 4; ++p) {
    for (std::size_t q = 1; q <= 4; ++q) {
      auto x = random_space(p, {}, rng);
      auto y = random_space(q, {}, rng);
      for (std::size_t k = 1; k <= std::min(p, q); ++k) {
        for_each_partition(p, k, [&](const Partition& dx) {
          for_each_partition(q, k, [&](const Partition& dy) {
            for_each_permutation(k, [&](const Permutation& m) {
              BlockCorrespondence bc(dx, dy, m.images());
              auto rel = bc.expansion();
              CHECK(is_correspondence(rel));
              CHECK(irreducible_by_removal(rel) == bc.singleton_sided());
              CHECK(is_irreducible(rel) == bc.singleton_sided());
              CHECK(block_distortion(x, y, bc) == distortion(x, y, rel));
              return true;
            });
            return true;
          });
          return true;
        });
      }
    }
  }
}

TEST_CASE("block distortion of singleton blocks is the bijection distortion") {
  Rng rng(4);
  auto x = random_space(4, {}, rng);
  auto y = random_space(4, {}, rng);
  BlockCorrespondence bc(Partition::singletons(4), Partition::singletons(4), {2, 0, 3, 1});
  double direct = 0.0;
  std::vector<std::size_t> m{2, 0, 3, 1};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      direct = std::max(direct, std::abs(x.distance(i, j) - y.distance(m[i], m[j])));
  CHECK(block_distortion(x, y, bc) == direct);
}

TEST_CASE("block correspondence validation") {
  CHECK_THROWS_AS(BlockCorrespondence(Partition::singletons(2), Partition::singletons(3)), Error);
  CHECK_THROWS_AS(BlockCorrespondence(Partition::singletons(2), Partition::singletons(2), {0, 0}), Error);
}
