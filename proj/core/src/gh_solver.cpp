#include "ghlab/gh_solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace ghlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Depth-first search over irreducible correspondences between `big` (P
// points) and `small` (Q points), P >= Q.
//
// A candidate is encoded by phi: big -> small plus an attachment of every
// small point outside phi's image to a big point x whose phi-fiber is {x}
// and with phi(x) < that point. This encodes each irreducible
// correspondence exactly once: blocks X_i x {y} come from fibers of phi,
// blocks {x} x Y_i have phi(x) = min Y_i and the rest of Y_i attached.
class IrreducibleSearch {
 public:
  IrreducibleSearch(const FiniteMetricSpace& big, const FiniteMetricSpace& small, double bound,
                    double lower_bound)
      : big_(big),
        small_(small),
        p_(big.size()),
        q_(small.size()),
        best_(bound),
        lower_bound_(lower_bound),
        phi_(p_),
        fiber_(q_, 0),
        attach_(q_, kNone) {
    pairs_.reserve(p_ + q_);
  }

  bool run() {
    assign_big(0, 0.0);
    return found_;
  }

  double best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::size_t>& best_phi() const { return best_phi_; }
  const std::vector<std::size_t>& best_attach() const { return best_attach_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  double added_cost(std::size_t b, std::size_t s) const {
    double d = 0.0;
    for (const auto& [pb, ps] : pairs_) d = std::max(d, std::abs(big_.distance(b, pb) - small_.distance(s, ps)));
    return d;
  }

  bool done() const { return found_ && best_ <= lower_bound_; }

  void assign_big(std::size_t b, double cur) {
    ++nodes_;
    if (b == p_) {
      uncovered_.clear();
      for (std::size_t s = 0; s < q_; ++s)
        if (fiber_[s] == 0) uncovered_.push_back(s);
      attach_small(0, cur);
      return;
    }
    std::vector<std::pair<double, std::size_t>> options;
    options.reserve(q_);
    for (std::size_t s = 0; s < q_; ++s) {
      double nd = std::max(cur, added_cost(b, s));
      if (nd < best_) options.emplace_back(nd, s);
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& l, const auto& r) { return l.first < r.first; });
    for (const auto& [nd, s] : options) {
      if (nd >= best_ || done()) return;
      phi_[b] = s;
      ++fiber_[s];
      pairs_.emplace_back(b, s);
      assign_big(b + 1, nd);
      pairs_.pop_back();
      --fiber_[s];
    }
  }

  void attach_small(std::size_t idx, double cur) {
    ++nodes_;
    if (idx == uncovered_.size()) {
      if (cur < best_) {
        best_ = cur;
        best_phi_ = phi_;
        best_attach_ = attach_;
        found_ = true;
      }
      return;
    }
    const std::size_t s = uncovered_[idx];
    std::vector<std::pair<double, std::size_t>> options;
    for (std::size_t b = 0; b < p_; ++b) {
      if (fiber_[phi_[b]] != 1 || phi_[b] > s) continue;
      double nd = std::max(cur, added_cost(b, s));
      if (nd < best_) options.emplace_back(nd, b);
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& l, const auto& r) { return l.first < r.first; });
    for (const auto& [nd, b] : options) {
      if (nd >= best_ || done()) return;
      attach_[s] = b;
      pairs_.emplace_back(b, s);
      attach_small(idx + 1, nd);
      pairs_.pop_back();
      attach_[s] = kNone;
    }
  }

  const FiniteMetricSpace& big_;
  const FiniteMetricSpace& small_;
  std::size_t p_, q_;
  double best_;
  double lower_bound_;
  bool found_ = false;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> phi_, fiber_, attach_, uncovered_;
  std::vector<IndexPair> pairs_;
  std::vector<std::size_t> best_phi_, best_attach_;
};

// Turns the (phi, attach) encoding back into matched partitions, with the
// left partition on `x`'s side.
BlockCorrespondence decode(const std::vector<std::size_t>& phi, const std::vector<std::size_t>& attach,
                           std::size_t q, bool swapped) {
  const std::size_t p = phi.size();
  std::vector<Block> big_blocks, small_blocks;
  std::vector<std::size_t> block_of_small(q, static_cast<std::size_t>(-1));
  for (std::size_t s = 0; s < q; ++s) {
    Block fiber;
    for (std::size_t b = 0; b < p; ++b)
      if (phi[b] == s) fiber.push_back(b);
    if (fiber.empty()) continue;
    Block ys{s};
    if (fiber.size() == 1)
      for (std::size_t u = 0; u < q; ++u)
        if (attach[u] == fiber.front()) ys.push_back(u);
    big_blocks.push_back(std::move(fiber));
    small_blocks.push_back(std::move(ys));
  }
  Partition big_part(p, big_blocks), small_part(q, small_blocks);
  const auto& lhs = swapped ? small_part : big_part;
  const auto& rhs = swapped ? big_part : small_part;
  const auto& lhs_raw = swapped ? small_blocks : big_blocks;
  const auto& rhs_raw = swapped ? big_blocks : small_blocks;
  auto rhs_labels = rhs.labels();
  auto lhs_labels = lhs.labels();
  std::vector<std::size_t> match(lhs.block_count());
  for (std::size_t r = 0; r < lhs_raw.size(); ++r)
    match[lhs_labels[lhs_raw[r].front()]] = rhs_labels[rhs_raw[r].front()];
  return BlockCorrespondence(lhs, rhs, std::move(match));
}

std::optional<GhResult> branch_and_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                         double bound) {
  const bool swapped = x.size() < y.size();
  const auto& big = swapped ? y : x;
  const auto& small = swapped ? x : y;
  const double lower = std::abs(diameter(x) - diameter(y));
  IrreducibleSearch search(big, small, bound, lower);
  if (!search.run()) return std::nullopt;
  return GhResult{0.5 * search.best(), decode(search.best_phi(), search.best_attach(), small.size(), swapped),
                  search.nodes()};
}

GhResult block_enumeration(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  const std::size_t kmax = std::min(x.size(), y.size());
  double best = kInf;
  std::optional<BlockCorrespondence> witness;
  std::uint64_t scored = 0;
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::vector<Partition> xs, ys;
    for_each_partition(x.size(), k, [&](const Partition& d) { xs.push_back(d); return true; });
    for_each_partition(y.size(), k, [&](const Partition& d) { ys.push_back(d); return true; });
    for (const auto& dx : xs) {
      for (const auto& dy : ys) {
        for_each_permutation(k, [&](const Permutation& m) {
          BlockCorrespondence bc(dx, dy, m.images());
          if (!bc.singleton_sided()) return true;
          ++scored;
          double d = block_distortion(x, y, bc);
          if (d < best) {
            best = d;
            witness = std::move(bc);
          }
          return true;
        });
      }
    }
  }
  return GhResult{0.5 * best, std::move(*witness), scored};
}

}  // namespace

GhResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y, GhBackend backend) {
  if (backend == GhBackend::IrreducibleBlocks) return block_enumeration(x, y);
  return *branch_and_bound(x, y, kInf);
}

std::optional<GhResult> gh_exact_below(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                       double bound) {
  return branch_and_bound(x, y, bound);
}

BijectionResult gh_bijective(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  const std::size_t n = x.size();
  if (y.size() != n) {
    throw Error(ErrorKind::CardinalityMismatch,
                "bijections need equal cardinalities, got " + std::to_string(n) + " and " +
                    std::to_string(y.size()));
  }
  double best = kInf;
  std::vector<std::size_t> cur(n), best_map;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t i, double dis) -> void {
    if (i == n) {
      if (dis < best) {
        best = dis;
        best_map = cur;
      }
      return;
    }
    std::vector<std::pair<double, std::size_t>> options;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      double nd = dis;
      for (std::size_t k = 0; k < i; ++k) nd = std::max(nd, std::abs(x.distance(i, k) - y.distance(j, cur[k])));
      if (nd < best) options.emplace_back(nd, j);
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& l, const auto& r) { return l.first < r.first; });
    for (const auto& [nd, j] : options) {
      if (nd >= best) return;
      used[j] = true;
      cur[i] = j;
      self(self, i + 1, nd);
      used[j] = false;
    }
  };
  rec(rec, 0, 0.0);
  return BijectionResult{0.5 * best, Permutation(best_map)};
}

MinDiameterResult min_diameter_partition(const FiniteMetricSpace& x, std::size_t n) {
  const std::size_t m = x.size();
  if (n == 0) throw Error(ErrorKind::BadBlockCount, "block count must be positive");
  if (n > m) return {};
  double best = kInf;
  std::vector<std::size_t> label(m), best_label;
  std::vector<Block> blocks;
  auto rec = [&](auto&& self, std::size_t i, double cur) -> void {
    if (blocks.size() + (m - i) < n) return;
    if (i == m) {
      if (blocks.size() == n && cur < best) {
        best = cur;
        best_label = label;
      }
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      double nd = cur;
      for (auto j : blocks[b]) nd = std::max(nd, x.distance(i, j));
      if (nd >= best) continue;
      blocks[b].push_back(i);
      label[i] = b;
      self(self, i + 1, nd);
      blocks[b].pop_back();
    }
    if (blocks.size() < n && cur < best) {
      blocks.push_back({i});
      label[i] = blocks.size() - 1;
      self(self, i + 1, cur);
      blocks.pop_back();
    }
  };
  rec(rec, 0, 0.0);
  return {best, Partition::from_labels(best_label)};
}

std::pair<FiniteMetricSpace, FiniteMetricSpace> gap_trial_spaces(const GapSearchOptions& opts,
                                                                 std::uint64_t trial) {
  Rng rng(mix_seed(opts.seed, trial));
  auto a = random_space(opts.points, opts.range, rng);
  auto b = random_space(opts.points, opts.range, rng);
  return {std::move(a), std::move(b)};
}

std::optional<GapWitness> bijection_gap_search(const GapSearchOptions& opts) {
  if (opts.points < 3) throw Error(ErrorKind::BadArgument, "gap search needs at least 3 points");
  unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(opts.trials, 1)));

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> first_hit{opts.trials};
  std::mutex mu;
  std::optional<GapWitness> result;

  auto worker = [&] {
    for (;;) {
      std::uint64_t t = next.fetch_add(1);
      if (t >= opts.trials || t >= first_hit.load()) return;
      auto [a, b] = gap_trial_spaces(opts, t);
      auto bij = gh_bijective(a, b);
      auto below = gh_exact_below(a, b, 2.0 * (bij.distance - kGapThreshold));
      if (!below) continue;
      std::lock_guard lock(mu);
      if (t < first_hit.load()) {
        first_hit.store(t);
        result = GapWitness{std::move(a), std::move(b), below->distance, bij.distance,
                            std::move(below->witness), t};
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return result;
}

unsigned threads_from_env() {
  const char* v = std::getenv("GHLAB_THREADS");
  long n = v ? std::strtol(v, nullptr, 10) : 0;
  if (n <= 0) return std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(n);
}

}  // namespace ghlab
