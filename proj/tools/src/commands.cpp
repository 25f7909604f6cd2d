#include "ghlab/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>

#include "ghlab/config_space.hpp"
#include "ghlab/edge_perms.hpp"
#include "ghlab/error.hpp"
#include "ghlab/gh_solver.hpp"
#include "ghlab/io.hpp"
#include "ghlab/simplex.hpp"

#ifndef GHLAB_VERSION
#define GHLAB_VERSION "unknown"
#endif

namespace ghlab::cli {

namespace {

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::IoError || kind == ErrorKind::ParseError ? kIoOrParse : kInvalidInput;
}

json one_based(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (auto i : v) out.push_back(i + 1);
  return out;
}

json error_json(const Error& e) {
  return {{"kind", std::string(to_string(e.kind()))}, {"indices", one_based(e.indices())}, {"message", e.what()}};
}

template <class Body>
Report run(std::string command, std::vector<std::string> args, Body&& body) {
  Report r;
  r.command = std::move(command);
  r.args = std::move(args);
  r.version = GHLAB_VERSION;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const Error& e) {
    r.exit_code = exit_code_for(e.kind());
    r.results["error"] = error_json(e);
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

FiniteMetricSpace load(Report& r, const std::string& path) {
  const auto text = read_file(path);
  r.inputs.push_back({path, hex64(fnv1a(text))});
  return parse_space(text);
}

void digest_args(Report& r) {
  std::string joined;
  for (const auto& a : r.args) joined += a + '\0';
  r.inputs.push_back({"args", hex64(fnv1a(joined))});
}

std::string num(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json condensed(const FiniteMetricSpace& x) {
  return {{"n", x.size()}, {"rho", std::vector<double>(x.rho().begin(), x.rho().end())}};
}

json correspondence_json(const BlockCorrespondence& c) {
  json pairs = json::array();
  const auto rel = c.expansion();
  for (const auto& [a, b] : rel.pairs()) pairs.push_back({a + 1, b + 1});
  json left = json::array(), right = json::array();
  for (std::size_t i = 0; i < c.block_count(); ++i) {
    left.push_back(one_based(c.left()[i]));
    right.push_back(one_based(c.right_block(i)));
  }
  return {{"pairs", pairs}, {"left_blocks", left}, {"right_blocks", right}};
}

json perm_json(const Permutation& p) { return one_based(p.images()); }

json edge_table(const EdgePermutation& a) {
  EdgeSet edges(a.n);
  json out = json::array();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& [i, j] = edges[e];
    const auto& [k, l] = edges[a.map(e)];
    out.push_back({{i + 1, j + 1}, {k + 1, l + 1}});
  }
  return out;
}

}  // namespace

Report cmd_validate(const std::string& path) {
  return run("validate", {path}, [&](Report& r) {
    try {
      auto x = load(r, path);
      r.results["valid"] = true;
      r.results["n"] = x.size();
      r.results["diameter"] = diameter(x);
    } catch (const Error& e) {
      if (exit_code_for(e.kind()) != kInvalidInput) throw;
      r.results["valid"] = false;
      r.results["violation"] = error_json(e);
      r.exit_code = kInvalidInput;
    }
  });
}

Report cmd_dist(const std::string& path_a, const std::string& path_b, DistMethod method) {
  static constexpr const char* names[] = {"exact", "bijection", "both"};
  return run("dist", {path_a, path_b, "--method", names[static_cast<int>(method)]}, [&](Report& r) {
    auto x = load(r, path_a);
    auto y = load(r, path_b);
    r.results["n_x"] = x.size();
    r.results["n_y"] = y.size();
    std::optional<double> exact, bij;
    if (method != DistMethod::Bijection) {
      auto g = gh_exact(x, y);
      exact = g.distance;
      r.results["exact"] = {{"distance", g.distance},
                            {"nodes", g.nodes},
                            {"correspondence", correspondence_json(g.witness)}};
    }
    if (method != DistMethod::Exact) {
      auto b = gh_bijective(x, y);
      bij = b.distance;
      r.results["bijection"] = {{"distance", b.distance}, {"bijection", perm_json(b.bijection)}};
    }
    if (exact && bij) {
      r.results["gap"] = *bij - *exact > kGapThreshold;
      r.results["gap_size"] = *bij - *exact;
    }
  });
}

Report cmd_simplex(const std::string& path, std::size_t n, double t, SimplexMethod method) {
  static constexpr const char* names[] = {"closed", "enum", "solver", "all"};
  return run("simplex", {path, "--n", std::to_string(n), "--t", num(t), "--method", names[static_cast<int>(method)]},
             [&](Report& r) {
               auto x = load(r, path);
               SimplexSpec spec(n, t);
               r.results["m"] = x.size();
               r.results["n"] = n;
               r.results["t"] = t;
               r.results["diameter"] = diameter(x);
               const bool all = method == SimplexMethod::All;
               std::vector<double> values;
               if (all || method == SimplexMethod::Closed) {
                 auto c = gh_to_simplex_closed(spec, x);
                 values.push_back(c.distance);
                 r.results["closed"] = {{"distance", c.distance}, {"case", std::string(to_string(c.used))}};
               }
               if (all || method == SimplexMethod::Enum) {
                 if (all && n > x.size()) {
                   r.results["enum"] = {{"skipped", "n > #X"}};
                 } else {
                   double v = gh_to_simplex_enum(spec, x);
                   values.push_back(v);
                   r.results["enum"] = {{"distance", v}};
                 }
               }
               if (all || method == SimplexMethod::Solver) {
                 double v = gh_exact(spec.space(), x).distance;
                 values.push_back(v);
                 r.results["solver"] = {{"distance", v}};
               }
               if (all) {
                 json cases = json::array();
                 for (const auto& c : simplex_case_values(spec, x))
                   cases.push_back({{"case", std::string(to_string(c.which))}, {"distance", c.distance}});
                 r.results["applicable_cases"] = cases;
                 bool agree = true;
                 for (double v : values) agree = agree && std::abs(v - values.front()) <= 1e-9;
                 r.results["agree"] = agree;
                 if (!agree) {
                   r.results["error"] = {{"kind", "Disagreement"}, {"message", "closed form, enumeration and solver differ"}};
                   r.exit_code = kInvalidInput;
                 }
               }
             });
}

Report cmd_classify(const std::string& path) {
  return run("classify", {path}, [&](Report& r) {
    auto x = load(r, path);
    auto rho = to_rho(x);
    auto c = classify(rho);
    json stab = json::array(), triples = json::array();
    for (const auto& s : c.stabilizer) stab.push_back(perm_json(s));
    for (const auto& [i, j, k] : c.degenerate_triples) triples.push_back({i + 1, j + 1, k + 1});
    r.results["n"] = x.size();
    r.results["rho"] = rho.coords();
    r.results["regular"] = c.regular;
    r.results["degenerate"] = c.degenerate;
    r.results["generic"] = c.generic;
    r.results["stabilizer_order"] = c.stabilizer.size();
    r.results["stabilizer"] = stab;
    r.results["degenerate_triples"] = triples;
    r.results["tangent_cone_constraints"] = c.degenerate_triples.size();
  });
}

Report cmd_orbit(const std::string& path, std::size_t limit) {
  return run("orbit", {path, "--limit", std::to_string(limit)}, [&](Report& r) {
    auto x = load(r, path);
    auto rho = to_rho(x);
    auto o = orbit(rho);
    auto s = stabilizer(rho);
    json reps = json::array();
    for (std::size_t i = 0; i < o.size() && i < limit; ++i) reps.push_back(o[i].coords());
    r.results["n"] = x.size();
    r.results["orbit_size"] = o.size();
    r.results["stabilizer_order"] = s.size();
    r.results["group_order"] = factorial(x.size());
    r.results["representatives"] = reps;
  });
}

Report cmd_graph(std::size_t n, GraphCheck check) {
  static constexpr const char* names[] = {"lemma81", "lemma84", "remark82", "normalizer"};
  return run("graph", {"--n", std::to_string(n), "--check", names[static_cast<int>(check)]}, [&](Report& r) {
    digest_args(r);
    r.results["n"] = n;
    switch (check) {
      case GraphCheck::Lemma81: {
        auto s = search_non_induced(n);
        json found = json::array();
        for (const auto& a : s.non_induced) found.push_back(edge_table(a));
        r.results["adjacency_preserving"] = s.adjacency_preserving;
        r.results["vertex_induced"] = factorial(n);
        r.results["non_induced"] = s.non_induced.size();
        r.results["nodes"] = s.nodes;
        r.results["non_induced_tables"] = found;
        break;
      }
      case GraphCheck::Lemma84: {
        if (n < 2) throw Error(ErrorKind::BadArgument, "lemma84 needs n >= 2");
        if (n > 12) throw Error(ErrorKind::TooLarge, "lemma84 limited to n <= 12");
        auto c = count_edge_pairs(n);
        r.results["f0"] = c.f0;
        r.results["f1"] = c.f1;
        r.results["f0_formula"] = c.f0_formula;
        r.results["f1_formula"] = c.f1_formula;
        r.results["formulas_match"] = c.f0 == c.f0_formula && c.f1 == c.f1_formula;
        r.results["f0_greater"] = c.f0 > c.f1;
        break;
      }
      case GraphCheck::Remark82: {
        if (n != 4) throw Error(ErrorKind::BadArgument, "remark82 is the n = 4 table");
        auto a = remark82_alpha();
        auto s = search_non_induced(4);
        EdgeSet k4(4);
        json star = json::array();
        for (auto e : k4.star(0)) {
          const auto& [i, j] = k4[a.map(e)];
          star.push_back({i + 1, j + 1});
        }
        r.results["table"] = edge_table(a);
        r.results["adjacency_preserving"] = is_adjacency_preserving(a);
        r.results["vertex_induced"] = inducing_vertex_perm(a).has_value();
        r.results["star_of_1_image"] = star;
        r.results["found_by_search"] =
            std::find(s.non_induced.begin(), s.non_induced.end(), a) != s.non_induced.end();
        break;
      }
      case GraphCheck::Normalizer: {
        auto s = search_non_induced(n);
        std::vector<EdgePermutation> probes = s.non_induced;
        if (probes.empty()) probes.push_back(induced_edge_perm(Permutation::identity(n)));
        json out = json::array();
        for (const auto& a : probes) {
          auto p = normalizer_probe(a);
          json item = {{"alpha", edge_table(a)}, {"in_g", p.in_g}, {"normalizes", p.normalizes}};
          if (p.violating) item["violating_sigma"] = perm_json(*p.violating);
          out.push_back(item);
        }
        r.results["non_induced"] = s.non_induced.size();
        r.results["probes"] = out;
        break;
      }
    }
  });
}

Report cmd_search(const SearchArgs& a) {
  std::vector<std::string> args{"--points", std::to_string(a.points), "--trials", std::to_string(a.trials),
                                "--seed",   std::to_string(a.seed),   "--lo",     num(a.range.lo),
                                "--hi",     num(a.range.hi)};
  if (a.out) {
    args.push_back("--out");
    args.push_back(*a.out);
  }
  return run("search", std::move(args), [&](Report& r) {
    digest_args(r);
    GapSearchOptions opts;
    opts.points = a.points;
    opts.trials = a.trials;
    opts.seed = a.seed;
    opts.range = a.range;
    opts.threads = a.threads ? a.threads : threads_from_env();
    r.runtime["threads"] = opts.threads;
    auto w = bijection_gap_search(opts);
    r.results["found"] = w.has_value();
    if (!w) {
      r.exit_code = kSearchExhausted;
      return;
    }
    json witness = {{"points", a.points},
                    {"seed", a.seed},
                    {"trial", w->trial},
                    {"x", condensed(w->x)},
                    {"y", condensed(w->y)},
                    {"exact", w->exact},
                    {"bijective", w->bijective},
                    {"gap", w->bijective - w->exact},
                    {"correspondence", correspondence_json(w->correspondence)}};
    r.results["witness"] = witness;
    if (a.out) {
      std::ofstream f(*a.out);
      if (!f) throw Error(ErrorKind::IoError, "cannot write " + *a.out);
      f << witness.dump(2) << '\n';
      if (!f) throw Error(ErrorKind::IoError, "write failed: " + *a.out);
    }
  });
}

}  // namespace ghlab::cli
