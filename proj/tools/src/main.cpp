#include <cstdio>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "ghlab/cli/commands.hpp"

using namespace ghlab::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact Gromov-Hausdorff distances and related checks for finite metric spaces"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the report as JSON");

  Report report;
  std::string path, path_b;

  auto* validate = app.add_subcommand("validate", "Check that a file holds a finite metric space");
  validate->add_option("path", path, "CSV or JSON distance matrix")->required();
  validate->callback([&] { report = cmd_validate(path); });

  auto* dist = app.add_subcommand("dist", "Gromov-Hausdorff distance between two spaces");
  std::map<std::string, DistMethod> dist_methods{
      {"exact", DistMethod::Exact}, {"bijection", DistMethod::Bijection}, {"both", DistMethod::Both}};
  DistMethod dist_method = DistMethod::Exact;
  dist->add_option("a", path, "first space")->required();
  dist->add_option("b", path_b, "second space")->required();
  dist->add_option("--method", dist_method, "exact|bijection|both")
      ->transform(CLI::CheckedTransformer(dist_methods, CLI::ignore_case));
  dist->callback([&] { report = cmd_dist(path, path_b, dist_method); });

  auto* simplex = app.add_subcommand("simplex", "Distance from a space to t*Delta_n");
  std::map<std::string, SimplexMethod> simplex_methods{{"closed", SimplexMethod::Closed},
                                                       {"enum", SimplexMethod::Enum},
                                                       {"solver", SimplexMethod::Solver},
                                                       {"all", SimplexMethod::All}};
  SimplexMethod simplex_method = SimplexMethod::All;
  std::size_t simplex_n = 1;
  double simplex_t = 1.0;
  simplex->add_option("path", path, "space")->required();
  simplex->add_option("--n", simplex_n, "simplex point count")->required()->check(CLI::PositiveNumber);
  simplex->add_option("--t", simplex_t, "simplex edge length")->required()->check(CLI::PositiveNumber);
  simplex->add_option("--method", simplex_method, "closed|enum|solver|all")
      ->transform(CLI::CheckedTransformer(simplex_methods, CLI::ignore_case));
  simplex->callback([&] { report = cmd_simplex(path, simplex_n, simplex_t, simplex_method); });

  auto* classify = app.add_subcommand("classify", "Regular/degenerate/generic classification");
  classify->add_option("path", path, "space")->required();
  classify->callback([&] { report = cmd_classify(path); });

  auto* orbit = app.add_subcommand("orbit", "Orbit of the distance vector under relabelling");
  std::size_t orbit_limit = 24;
  orbit->add_option("path", path, "space")->required();
  orbit->add_option("--limit", orbit_limit, "orbit points to list");
  orbit->callback([&] { report = cmd_orbit(path, orbit_limit); });

  auto* graph = app.add_subcommand("graph", "Edge-permutation checks on K_n");
  std::map<std::string, GraphCheck> checks{{"lemma81", GraphCheck::Lemma81},
                                           {"lemma84", GraphCheck::Lemma84},
                                           {"remark82", GraphCheck::Remark82},
                                           {"normalizer", GraphCheck::Normalizer}};
  GraphCheck check = GraphCheck::Lemma81;
  std::size_t graph_n = 4;
  graph->add_option("--n", graph_n, "vertex count")->required();
  graph->add_option("--check", check, "lemma81|lemma84|remark82|normalizer")
      ->required()
      ->transform(CLI::CheckedTransformer(checks, CLI::ignore_case));
  graph->callback([&] { report = cmd_graph(graph_n, check); });

  auto* search = app.add_subcommand("search", "Look for spaces where no bijection is optimal");
  SearchArgs sa;
  std::string out;
  search->add_option("--points", sa.points, "points per space")->capture_default_str();
  search->add_option("--trials", sa.trials, "random pairs to try")->capture_default_str();
  search->add_option("--seed", sa.seed, "64-bit seed for mt19937_64")->capture_default_str();
  search->add_option("--lo", sa.range.lo, "smallest sampled distance")->capture_default_str();
  search->add_option("--hi", sa.range.hi, "largest sampled distance")->capture_default_str();
  search->add_option("--out", out, "write the witness here when found");
  search->callback([&] {
    if (!out.empty()) sa.out = out;
    report = cmd_search(sa);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kIoOrParse;
  }

  if (as_json) {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    std::cout << render_text(report);
  }
  return report.exit_code;
}
