#include <doctest.h>

#include <set>

#include "ghlab/partition.hpp"
#include "oracles.hpp"

using namespace ghlab;

namespace {

oracle::BlockSet as_set(const Partition& p) {
  return oracle::BlockSet(p.blocks().begin(), p.blocks().end());
}

}  // namespace

TEST_CASE("partition counts match brute force") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == 7);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      auto expected = oracle::brute_partitions(n, k);
      std::set<oracle::BlockSet> seen;
      std::size_t count = 0;
      std::vector<std::size_t> prev;
      for_each_partition(n, k, [&](const Partition& p) {
        ++count;
        CHECK(p.block_count() == k);
        seen.insert(as_set(p));
        // restricted growth strings come out in strictly increasing order
        auto lab = p.labels();
        CHECK(lab > prev);
        prev = lab;
        return true;
      });
      CHECK(count == expected.size());
      CHECK(seen == expected);
      CHECK(count == stirling2(n, k));
    }
  }
}

TEST_CASE("enumeration edge cases") {
  std::size_t count = 0;
  for_each_partition(5, 5, [&](const Partition& p) {
    CHECK(p == Partition::singletons(5));
    ++count;
    return true;
  });
  CHECK(count == 1);
  CHECK_THROWS_AS(PartitionEnumerator(3, 0), Error);
  CHECK_THROWS_AS(PartitionEnumerator(3, 4), Error);
  PartitionEnumerator one(1, 1);
  CHECK(one.next());
  CHECK_FALSE(one.next());
}

TEST_CASE("partition validation and canonical form") {
  Partition p(4, {{3, 1}, {0}, {2}});
  CHECK(p.blocks() == std::vector<Block>{{0}, {1, 3}, {2}});
  CHECK(p.labels() == std::vector<std::size_t>{0, 1, 2, 1});
  CHECK_THROWS_AS(Partition(3, {{0, 1}}), Error);
  CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(Partition(3, {{0, 1, 2}, {}}), Error);
}

TEST_CASE("partition functionals") {
  auto line = oracle::line_space({0, 1, 10});
  Partition d(3, {{0, 1}, {2}});
  CHECK(partition_diameter(line, d) == 1.0);
  CHECK(partition_alpha(line, d) == 9.0);
  CHECK(partition_beta(line, d) == 10.0);
  Partition whole(3, {{0, 1, 2}});
  CHECK(partition_alpha(line, whole) == std::numeric_limits<double>::infinity());
  CHECK(partition_beta(line, whole) == 0.0);
  CHECK(partition_diameter(line, Partition::singletons(3)) == 0.0);
}
