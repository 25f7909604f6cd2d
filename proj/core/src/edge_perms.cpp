#include "ghlab/edge_perms.hpp"

#include <algorithm>

#include "ghlab/error.hpp"
#include "ghlab/metric_space.hpp"

namespace ghlab {

EdgeSet::EdgeSet(std::size_t n) : n_(n) {
  if (n < 2) throw Error(ErrorKind::BadArgument, "K_n needs n >= 2");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges_.emplace_back(i, j);
}

std::size_t EdgeSet::index(std::size_t i, std::size_t j) const {
  if (i == j || i >= n_ || j >= n_) throw Error(ErrorKind::IndexOutOfRange, "not an edge", {i, j});
  return condensed_index(n_, i, j);
}

bool EdgeSet::adjacent(std::size_t e, std::size_t f) const {
  if (e == f) return false;
  const auto& [a, b] = edges_[e];
  const auto& [c, d] = edges_[f];
  return a == c || a == d || b == c || b == d;
}

std::vector<std::size_t> EdgeSet::star(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].first == v || edges_[e].second == v) out.push_back(e);
  return out;
}

EdgePermutation induced_edge_perm(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  if (n < 2) throw Error(ErrorKind::BadPermutation, "vertex permutation of K_n needs n >= 2");
  EdgeSet edges(n);
  std::vector<std::size_t> img(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) img[e] = edges.index(sigma(edges[e].first), sigma(edges[e].second));
  return {n, Permutation(std::move(img))};
}

namespace {

void check_edge_perm(const EdgePermutation& alpha) {
  if (alpha.n < 2 || alpha.map.size() != pair_count(alpha.n)) {
    throw Error(ErrorKind::BadPermutation, "edge permutation size does not match K_n");
  }
}

}  // namespace

bool is_adjacency_preserving(const EdgePermutation& alpha) {
  check_edge_perm(alpha);
  EdgeSet edges(alpha.n);
  for (std::size_t e = 0; e < edges.size(); ++e)
    for (std::size_t f = e + 1; f < edges.size(); ++f)
      if (edges.adjacent(e, f) && !edges.adjacent(alpha.map(e), alpha.map(f))) return false;
  return true;
}

std::optional<Permutation> inducing_vertex_perm(const EdgePermutation& alpha) {
  check_edge_perm(alpha);
  const std::size_t n = alpha.n;
  EdgeSet edges(n);
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> common;
    for (std::size_t w = 0; w < n; ++w) common.push_back(w);
    for (auto e : edges.star(v)) {
      const auto& [a, b] = edges[alpha.map(e)];
      std::erase_if(common, [&](std::size_t w) { return w != a && w != b; });
    }
    if (common.empty()) return std::nullopt;
    candidates[v] = std::move(common);
  }
  std::vector<std::size_t> sigma(n);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return induced_edge_perm(Permutation(sigma)) == alpha;
    for (auto w : candidates[v]) {
      if (used[w]) continue;
      used[w] = true;
      sigma[v] = w;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return Permutation(sigma);
}

EdgePermutation remark82_alpha() {
  EdgeSet k4(4);
  auto e = [&](std::size_t i, std::size_t j) { return k4.index(i - 1, j - 1); };
  std::vector<std::size_t> img(k4.size());
  img[e(1, 2)] = e(2, 3);
  img[e(1, 3)] = e(3, 4);
  img[e(1, 4)] = e(2, 4);
  img[e(2, 3)] = e(1, 3);
  img[e(2, 4)] = e(1, 2);
  img[e(3, 4)] = e(1, 4);
  return {4, Permutation(std::move(img))};
}

NonInducedSearch search_non_induced(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::BadArgument, "search needs n >= 3");
  if (n > 6) throw Error(ErrorKind::TooLarge, "search limited to n <= 6");
  EdgeSet edges(n);
  const std::size_t m = edges.size();
  NonInducedSearch out;
  std::vector<std::size_t> img(m);
  std::vector<bool> used(m, false);
  // Edges are assigned in index order; an image is consistent when it has
  // the same adjacency relation to every earlier image as the edges do.
  auto rec = [&](auto&& self, std::size_t e) -> void {
    ++out.nodes;
    if (e == m) {
      ++out.adjacency_preserving;
      EdgePermutation alpha{n, Permutation(img)};
      if (!inducing_vertex_perm(alpha)) out.non_induced.push_back(std::move(alpha));
      return;
    }
    for (std::size_t f = 0; f < m; ++f) {
      if (used[f]) continue;
      bool ok = true;
      for (std::size_t g = 0; g < e && ok; ++g) ok = edges.adjacent(e, g) == edges.adjacent(f, img[g]);
      if (!ok) continue;
      used[f] = true;
      img[e] = f;
      self(self, e + 1);
      used[f] = false;
    }
  };
  rec(rec, 0);
  return out;
}

EdgePairCounts count_edge_pairs(std::size_t n) {
  EdgeSet edges(n);
  EdgePairCounts c;
  for (std::size_t e = 0; e < edges.size(); ++e)
    for (std::size_t f = e + 1; f < edges.size(); ++f) (edges.adjacent(e, f) ? c.f1 : c.f0)++;
  const std::uint64_t m = n;
  c.f0_formula = m * (m - 1) * (m - 2) * (n >= 3 ? m - 3 : 0) / 8;
  c.f1_formula = m * (m - 1) * (m - 2) / 2;
  return c;
}

NormalizerProbe normalizer_probe(const EdgePermutation& alpha) {
  check_edge_perm(alpha);
  if (alpha.n > 6) throw Error(ErrorKind::TooLarge, "normalizer probe limited to n <= 6");
  NormalizerProbe r;
  r.in_g = inducing_vertex_perm(alpha).has_value();
  const Permutation inv = alpha.map.inverse();
  r.normalizes = true;
  for_each_permutation(alpha.n, [&](const Permutation& sigma) {
    const auto g = induced_edge_perm(sigma);
    EdgePermutation conj{alpha.n, inv.after(g.map.after(alpha.map))};
    if (!inducing_vertex_perm(conj)) {
      r.normalizes = false;
      r.violating = sigma;
      return false;
    }
    return true;
  });
  return r;
}

}  // namespace ghlab
