#include "saga/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "saga/error.hpp"

namespace saga {

std::vector<std::size_t> bisection_size_profile(std::size_t n, int k) {
  std::vector<std::size_t> sizes{n};
  while (sizes.size() < static_cast<std::size_t>(k)) {
    auto largest = std::max_element(sizes.begin(), sizes.end());
    const std::size_t s = *largest;
    *largest = (s + 1) / 2;
    sizes.push_back(s / 2);
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

namespace {

constexpr double kTieTolerance = 1e-12;

// Restricted-growth enumeration: vertex i joins an existing block or opens
// block `blocks`. The cut is accumulated as vertices are placed.
class Enumerator {
 public:
  Enumerator(const AffinityGraph& g, int k, const std::vector<std::size_t>* profile)
      : g_(g),
        c_(g, all_indices(g.vertex_count())),
        n_(g.vertex_count()),
        k_(static_cast<std::size_t>(k)),
        profile_(profile),
        label_(n_, 0),
        block_size_(k_, 0) {
    if (profile_) max_block_ = profile_->front();
  }

  Partition run() {
    recurse(0, 0, 0.0);
    return best_;
  }

 private:
  static std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
  }

  void recurse(std::size_t i, std::size_t blocks, double cut) {
    if (i == n_) {
      if (blocks == k_) leaf(cut);
      return;
    }
    // Every remaining vertex would have to open a new block.
    if (k_ - blocks > n_ - i) return;
    const auto row = c_.row(i);
    const std::size_t limit = std::min(blocks + 1, k_);
    for (std::size_t b = 0; b < limit; ++b) {
      if (block_size_[b] == max_block_) continue;
      double delta = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        if (label_[j] != b) delta += row[j];
      }
      label_[i] = b;
      ++block_size_[b];
      recurse(i + 1, b == blocks ? blocks + 1 : blocks, cut + delta);
      --block_size_[b];
    }
  }

  void leaf(double cut) {
    if (profile_) {
      std::vector<std::size_t> sizes(block_size_);
      std::sort(sizes.begin(), sizes.end(), std::greater<>());
      if (sizes != *profile_) return;
    }
    if (found_ && cut > best_cut_ + kTieTolerance) return;
    Partition p;
    p.subsets.resize(k_);
    for (std::size_t v = 0; v < n_; ++v) p.subsets[label_[v]].push_back(g_.vertices()[v]);
    p.canonicalize();
    const bool tie = found_ && cut >= best_cut_ - kTieTolerance;
    if (tie && !(p.subsets < best_.subsets)) return;
    best_ = std::move(p);
    if (!tie) best_cut_ = cut;
    found_ = true;
  }

  const AffinityGraph& g_;
  DenseWeights c_;
  std::size_t n_;
  std::size_t k_;
  const std::vector<std::size_t>* profile_;
  std::size_t max_block_ = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label_;
  std::vector<std::size_t> block_size_;
  Partition best_;
  double best_cut_ = 0.0;
  bool found_ = false;
};

}  // namespace

Partition oracle_min_kcut(const AffinityGraph& g, int k, Balance balance) {
  const std::size_t n = g.vertex_count();
  if (n > kOracleMaxVertices) {
    throw Error(ErrorCode::TooLarge, "oracle supports at most " +
                                         std::to_string(kOracleMaxVertices) + " vertices");
  }
  if (k <= 0) throw Error(ErrorCode::KNonPositive, "k must be positive");
  if (static_cast<std::size_t>(k) > n) {
    throw Error(ErrorCode::KTooLarge, "k exceeds vertex count");
  }
  std::vector<std::size_t> profile;
  if (balance == Balance::Algorithm1Sizes) profile = bisection_size_profile(n, k);
  Enumerator e(g, k, balance == Balance::Algorithm1Sizes ? &profile : nullptr);
  return e.run();
}

}  // namespace saga
