#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ghlab/cli/commands.hpp"
#include "ghlab/io.hpp"

using namespace ghlab::cli;

namespace {

std::string fixture(const char* name) { return std::string(GHLAB_FIXTURE_DIR) + "/" + name; }

double dist_of(const json& j) { return j.at("distance").get<double>(); }

}  // namespace

TEST_CASE("validate") {
  auto r = cmd_validate(fixture("line_0_1_10.csv"));
  CHECK(r.exit_code == kOk);
  CHECK(r.results["n"] == 3);
  CHECK(r.results["diameter"] == 10.0);
  CHECK(r.inputs.size() == 1);

  r = cmd_validate(fixture("bad_triangle.csv"));
  CHECK(r.exit_code == kInvalidInput);
  CHECK(r.results["valid"] == false);
  CHECK(r.results["violation"]["kind"] == "TriangleViolation");
  CHECK(r.results["violation"]["indices"] == json::array({1, 2, 3}));

  CHECK(cmd_validate(fixture("malformed.json")).exit_code == kIoOrParse);
  r = cmd_validate(fixture("does_not_exist.csv"));
  CHECK(r.exit_code == kIoOrParse);
  CHECK(r.results["error"]["kind"] == "IoError");
}

TEST_CASE("dist") {
  auto r = cmd_dist(fixture("point.json"), fixture("diam6.json"), DistMethod::Exact);
  REQUIRE(r.exit_code == kOk);
  CHECK(dist_of(r.results["exact"]) == 3.0);

  r = cmd_dist(fixture("diam6.json"), fixture("diam6.json"), DistMethod::Both);
  CHECK(dist_of(r.results["exact"]) == 0.0);
  CHECK(dist_of(r.results["bijection"]) == 0.0);
  CHECK(r.results["gap"] == false);

  for (const char* p : {"4", "5", "6"}) {
    auto x = fixture(("gap" + std::string(p) + "_x.json").c_str());
    auto y = fixture(("gap" + std::string(p) + "_y.json").c_str());
    r = cmd_dist(x, y, DistMethod::Both);
    REQUIRE(r.exit_code == kOk);
    CHECK(r.results["gap"] == true);
    auto stored = json::parse(ghlab::read_file(fixture(("gap" + std::string(p) + ".json").c_str())));
    CHECK(dist_of(r.results["exact"]) == stored["exact"].get<double>());
    CHECK(dist_of(r.results["bijection"]) == stored["bijective"].get<double>());
  }

  r = cmd_dist(fixture("line_0_1_10.csv"), fixture("diam6.json"), DistMethod::Bijection);
  CHECK(r.exit_code == kInvalidInput);
  CHECK(r.results["error"]["kind"] == "CardinalityMismatch");
}

TEST_CASE("simplex") {
  auto r = cmd_simplex(fixture("line_0_1_10.csv"), 2, 5.0, SimplexMethod::All);
  REQUIRE(r.exit_code == kOk);
  CHECK(dist_of(r.results["closed"]) == 2.5);
  CHECK(dist_of(r.results["enum"]) == 2.5);
  CHECK(dist_of(r.results["solver"]) == 2.5);
  CHECK(r.results["closed"]["case"] == "m=n+1");
  CHECK(r.results["agree"] == true);

  r = cmd_simplex(fixture("simplex4_s2.json"), 4, 3.0, SimplexMethod::All);
  CHECK(dist_of(r.results["closed"]) == 0.5);
  CHECK(r.results["agree"] == true);

  r = cmd_simplex(fixture("two_points_diam5.csv"), 3, 1.0, SimplexMethod::Enum);
  CHECK(r.exit_code == kInvalidInput);
  CHECK(r.results["error"]["kind"] == "TooManySimplexPoints");
  r = cmd_simplex(fixture("two_points_diam5.csv"), 3, 1.0, SimplexMethod::Closed);
  CHECK(dist_of(r.results["closed"]) == 2.0);
  CHECK(r.results["closed"]["case"] == "m<n");
  r = cmd_simplex(fixture("two_points_diam5.csv"), 3, 1.0, SimplexMethod::All);
  CHECK(r.exit_code == kOk);
  CHECK(r.results["enum"].contains("skipped"));
}

TEST_CASE("classify and orbit") {
  auto r = cmd_classify(fixture("rho_345.json"));
  CHECK(r.results["generic"] == true);
  CHECK(cmd_orbit(fixture("rho_345.json")).results["orbit_size"] == 6);

  r = cmd_classify(fixture("rho_111.json"));
  CHECK(r.results["regular"] == false);
  CHECK(r.results["stabilizer_order"] == 6);
  CHECK(cmd_orbit(fixture("rho_111.json")).results["orbit_size"] == 1);

  r = cmd_classify(fixture("rho_123.json"));
  CHECK(r.results["degenerate"] == true);
  CHECK(r.results["degenerate_triples"] == json::parse("[[2,1,3],[3,1,2]]"));
}

TEST_CASE("graph") {
  auto r = cmd_graph(5, GraphCheck::Lemma81);
  CHECK(r.results["non_induced"] == 0);
  CHECK(r.results["adjacency_preserving"] == 120);

  r = cmd_graph(4, GraphCheck::Remark82);
  CHECK(r.results["table"] == json::parse("[[[1,2],[2,3]],[[1,3],[3,4]],[[1,4],[2,4]],[[2,3],[1,3]],[[2,4],[1,2]],[[3,4],[1,4]]]"));
  CHECK(r.results["found_by_search"] == true);
  CHECK(r.results["vertex_induced"] == false);

  r = cmd_graph(8, GraphCheck::Lemma84);
  CHECK(r.results["f0"] == 210);
  CHECK(r.results["f1"] == 168);
  CHECK(r.results["f0_greater"] == true);

  r = cmd_graph(4, GraphCheck::Normalizer);
  CHECK(r.results["probes"].size() == 24);
  for (const auto& p : r.results["probes"]) CHECK(p["normalizes"] == true);

  CHECK(cmd_graph(7, GraphCheck::Lemma81).exit_code == kInvalidInput);
  CHECK(cmd_graph(13, GraphCheck::Lemma84).exit_code == kInvalidInput);
  CHECK(cmd_graph(5, GraphCheck::Remark82).exit_code == kInvalidInput);
}

TEST_CASE("search") {
  SearchArgs a;
  a.points = 4;
  a.trials = 1000;
  a.seed = 1;
  a.threads = 1;
  auto first = cmd_search(a);
  REQUIRE(first.exit_code == kOk);
  auto stored = json::parse(ghlab::read_file(fixture("gap4.json")));
  CHECK(first.results["witness"] == stored);

  a.threads = 3;
  auto threaded = cmd_search(a);
  CHECK(threaded.results_digest() == first.results_digest());
  CHECK(threaded.inputs[0].digest == first.inputs[0].digest);

  auto path = std::filesystem::temp_directory_path() / "ghlab_cli_test_witness.json";
  std::filesystem::remove(path);
  a.points = 3;
  a.trials = 200;
  a.out = path.string();
  auto none = cmd_search(a);
  CHECK(none.exit_code == kSearchExhausted);
  CHECK(none.results["found"] == false);
  CHECK_FALSE(std::filesystem::exists(path));

  a.points = 2;
  CHECK(cmd_search(a).exit_code == kInvalidInput);
}

TEST_CASE("report serialization round-trips") {
  auto r = cmd_dist(fixture("gap4_x.json"), fixture("gap4_y.json"), DistMethod::Both);
  auto j = to_json(r);
  auto back = report_from_json(json::parse(j.dump()));
  CHECK(to_json(back) == j);
  CHECK(back.results_digest() == r.results_digest());
  auto text = render_text(r);
  CHECK(text.find("results_digest: " + r.results_digest()) != std::string::npos);
  CHECK(text.find("gap: true") != std::string::npos);
}
