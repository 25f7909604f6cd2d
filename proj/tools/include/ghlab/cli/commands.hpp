#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ghlab/cli/report.hpp"
#include "ghlab/random.hpp"

namespace ghlab::cli {

// Point, edge and permutation indices in reports are 1-based.

Report cmd_validate(const std::string& path);

enum class DistMethod { Exact, Bijection, Both };
Report cmd_dist(const std::string& path_a, const std::string& path_b, DistMethod method);

enum class SimplexMethod { Closed, Enum, Solver, All };
Report cmd_simplex(const std::string& path, std::size_t n, double t, SimplexMethod method);

Report cmd_classify(const std::string& path);

/// At most `limit` orbit points are listed.
Report cmd_orbit(const std::string& path, std::size_t limit = 24);

enum class GraphCheck { Lemma81, Lemma84, Remark82, Normalizer };
Report cmd_graph(std::size_t n, GraphCheck check);

struct SearchArgs {
  std::size_t points = 4;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 1;
  DistanceRange range{};
  std::optional<std::string> out;
  unsigned threads = 0;  // 0: GHLAB_THREADS, then hardware
};
Report cmd_search(const SearchArgs& args);

}  // namespace ghlab::cli
