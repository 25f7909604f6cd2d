#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ghlab {

/// A bijection of {0, ..., n-1}, stored as its image table.
class Permutation {
 public:
  Permutation() = default;

  /// Throws BadPermutation unless `images` is a bijection of {0..size-1}.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// (this o other)(i) = this(other(i)).
  Permutation after(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// Visits every permutation of {0..n-1} in lexicographic order. The visitor
/// returns false to stop early.
void for_each_permutation(std::size_t n, const std::function<bool(const Permutation&)>& visit);

std::size_t factorial(std::size_t n);

}  // namespace ghlab
