#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ghlab/permutation.hpp"

namespace ghlab {

/// Edges of the complete graph K_n, indexed exactly like the condensed
/// distance vector: {0,1}, {0,2}, ..., {0,n-1}, {1,2}, ..., {n-2,n-1}.
class EdgeSet {
 public:
  explicit EdgeSet(std::size_t n);

  std::size_t vertices() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::pair<std::size_t, std::size_t>& operator[](std::size_t e) const { return edges_[e]; }
  std::size_t index(std::size_t i, std::size_t j) const;

  /// Distinct edges sharing a vertex.
  bool adjacent(std::size_t e, std::size_t f) const;

  /// Edges incident to vertex v.
  std::vector<std::size_t> star(std::size_t v) const;

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// A permutation of the edges of K_n.
struct EdgePermutation {
  std::size_t n = 0;
  Permutation map;

  friend bool operator==(const EdgePermutation&, const EdgePermutation&) = default;
  friend auto operator<=>(const EdgePermutation&, const EdgePermutation&) = default;
};

/// Edge {i,j} goes to {sigma(i), sigma(j)}.
EdgePermutation induced_edge_perm(const Permutation& sigma);

/// Maps every pair of adjacent edges to a pair of adjacent edges.
bool is_adjacency_preserving(const EdgePermutation& alpha);

/// The vertex permutation inducing alpha, if any. Each vertex is sent to
/// the common vertex of the images of its star; ambiguity (n = 2) is
/// resolved towards the lexicographically smallest valid answer.
std::optional<Permutation> inducing_vertex_perm(const EdgePermutation& alpha);

/// The n = 4 edge permutation that preserves adjacency but sends stars to
/// triangles:
///   {1,2}->{2,3}, {1,3}->{3,4}, {1,4}->{2,4}, {2,3}->{1,3}, {2,4}->{1,2}, {3,4}->{1,4}.
EdgePermutation remark82_alpha();

struct NonInducedSearch {
  std::vector<EdgePermutation> non_induced;
  std::uint64_t adjacency_preserving = 0;  // automorphisms of the line graph
  std::uint64_t nodes = 0;                 // backtracking nodes visited
};

/// Adjacency-preserving edge permutations that no vertex permutation
/// induces, found by backtracking over edge images. 3 <= n <= 6.
NonInducedSearch search_non_induced(std::size_t n);

struct EdgePairCounts {
  std::uint64_t f0 = 0;  // unordered pairs of disjoint edges
  std::uint64_t f1 = 0;  // unordered pairs of distinct adjacent edges
  std::uint64_t f0_formula = 0;
  std::uint64_t f1_formula = 0;
};

EdgePairCounts count_edge_pairs(std::size_t n);

struct NormalizerProbe {
  bool in_g = false;
  bool normalizes = false;
  std::optional<Permutation> violating;  // sigma with alpha^-1 * sigma * alpha outside G
};

/// Tests whether alpha normalizes the vertex-induced subgroup G of the
/// edge permutations by conjugating every element of G. n <= 6.
NormalizerProbe normalizer_probe(const EdgePermutation& alpha);

}  // namespace ghlab
