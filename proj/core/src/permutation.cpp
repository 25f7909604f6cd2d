#include "ghlab/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "ghlab/error.hpp"

namespace ghlab {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    auto v = images_[i];
    if (v >= images_.size() || seen[v]) {
      throw Error(ErrorKind::BadPermutation, "image table is not a bijection", {i});
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return Permutation(std::move(id));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size() != size()) throw Error(ErrorKind::DimensionMismatch, "composing permutations of different sizes");
  std::vector<std::size_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = images_[other.images_[i]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

void for_each_permutation(std::size_t n, const std::function<bool(const Permutation&)>& visit) {
  std::vector<std::size_t> cur(n);
  std::iota(cur.begin(), cur.end(), std::size_t{0});
  do {
    if (!visit(Permutation(cur))) return;
  } while (std::next_permutation(cur.begin(), cur.end()));
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace ghlab
