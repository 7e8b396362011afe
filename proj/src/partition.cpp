#include "saga/partition.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "saga/error.hpp"

namespace saga {

KlPass::KlPass(const DenseWeights& c, std::vector<Side> sides, ScanMode mode)
    : c_(c), sides_(std::move(sides)), mode_(mode) {
  begin();
}

double KlPass::d_value(const DenseWeights& c, std::span<const Side> sides, std::size_t x) {
  double external = 0.0;
  double internal = 0.0;
  const auto row = c.row(x);
  for (std::size_t y = 0; y < sides.size(); ++y) {
    if (y == x) continue;
    (sides[y] == sides[x] ? internal : external) += row[y];
  }
  return external - internal;
}

void KlPass::begin() {
  const std::size_t n = sides_.size();
  state_ = PassState{};
  state_.d.resize(n);
  state_.locked.assign(n, false);
  free_a_.clear();
  free_b_.clear();
  for (std::size_t x = 0; x < n; ++x) {
    state_.d[x] = d_value(c_, sides_, x);
    (sides_[x] == Side::A ? free_a_ : free_b_).push_back(x);
  }
  steps_left_ = std::min(free_a_.size(), free_b_.size());
}

SwapCandidate KlPass::step() {
  if (steps_left_ == 0) return {};
  const SwapCandidate best = best_swap(mode_, c_, state_.d, free_a_, free_b_);
  const std::size_t a = best.a;
  const std::size_t b = best.b;

  state_.gv.push_back(best.gain);
  state_.av.push_back(a);
  state_.bv.push_back(b);
  state_.locked[a] = true;
  state_.locked[b] = true;
  free_a_.erase(std::find(free_a_.begin(), free_a_.end(), a));
  free_b_.erase(std::find(free_b_.begin(), free_b_.end(), b));

  const auto row_a = c_.row(a);
  const auto row_b = c_.row(b);
  for (std::size_t x : free_a_) state_.d[x] += 2.0 * row_a[x] - 2.0 * row_b[x];
  for (std::size_t y : free_b_) state_.d[y] += 2.0 * row_b[y] - 2.0 * row_a[y];

  --steps_left_;
  return best;
}

bool KlPass::finish() {
  double prefix = 0.0;
  state_.g_max = 0.0;
  state_.t = 0;
  for (std::size_t i = 0; i < state_.gv.size(); ++i) {
    prefix += state_.gv[i];
    if (i == 0 || prefix > state_.g_max) {
      state_.g_max = prefix;
      state_.t = i + 1;
    }
  }
  if (state_.t == 0 || state_.g_max <= kGainEpsilon) return false;
  for (std::size_t i = 0; i < state_.t; ++i) {
    sides_[state_.av[i]] = Side::B;
    sides_[state_.bv[i]] = Side::A;
  }
  return true;
}

double bisection_cut(const DenseWeights& c, std::span<const Side> sides) {
  double cut = 0.0;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    const auto row = c.row(i);
    for (std::size_t j = i + 1; j < sides.size(); ++j) {
      if (sides[i] != sides[j]) cut += row[j];
    }
  }
  return cut;
}

namespace {

struct IndexBisection {
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
  double cut = 0.0;
  int passes = 0;
};

std::vector<ServiceId> names(const AffinityGraph& g, std::span<const std::size_t> subset,
                             std::span<const Side> sides, Side which) {
  std::vector<ServiceId> out;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (sides[i] == which) out.push_back(g.vertices()[subset[i]]);
  }
  return out;
}

// Runs KL passes from one seed bisection until no pass improves the cut.
std::pair<std::vector<Side>, int> refine(const AffinityGraph& g, const DenseWeights& c,
                                         std::span<const std::size_t> subset,
                                         std::vector<Side> seed, ScanMode mode,
                                         BisectTrace* trace) {
  KlPass pass(c, std::move(seed), mode);
  int passes = 0;
  for (; passes < kMaxPasses; ++passes) {
    if (passes > 0) pass.begin();
    PassRecord record;
    if (trace) record.a_before = names(g, subset, pass.sides(), Side::A);
    while (pass.steps_remaining() > 0) pass.step();
    const bool accepted = pass.finish();
    if (trace) {
      const auto& st = pass.state();
      record.gv = st.gv;
      for (auto a : st.av) record.av.push_back(g.vertices()[subset[a]]);
      for (auto b : st.bv) record.bv.push_back(g.vertices()[subset[b]]);
      record.t = st.t;
      record.g_max = st.g_max;
      record.accepted = accepted;
      record.a_after = names(g, subset, pass.sides(), Side::A);
      trace->passes.push_back(std::move(record));
    }
    if (!accepted) {
      ++passes;
      break;
    }
  }
  return {pass.sides(), passes};
}

IndexBisection bisect_indices(const AffinityGraph& g, std::span<const std::size_t> subset,
                              const KlOptions& options, BisectTrace* trace) {
  const std::size_t n = subset.size();
  if (n < 2) throw Error(ErrorCode::TooFewVertices, "bisection needs at least two vertices");
  const DenseWeights c(g, subset);
  const std::size_t a_size = (n + 1) / 2;

  auto split = [&](std::span<const std::size_t> order) {
    std::vector<Side> sides(n, Side::B);
    for (std::size_t i = 0; i < a_size; ++i) sides[order[i]] = Side::A;
    return sides;
  };

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});

  std::vector<Side> best_sides;
  double best_cut = 0.0;
  int total_passes = 0;
  if (!options.seed) {
    auto [sides, passes] = refine(g, c, subset, split(order), options.scan, trace);
    best_sides = std::move(sides);
    total_passes = passes;
    best_cut = bisection_cut(c, best_sides);
  } else {
    std::mt19937_64 rng(*options.seed);
    const int restarts = std::max(1, options.restarts);
    for (int r = 0; r < restarts; ++r) {
      std::shuffle(order.begin(), order.end(), rng);
      auto [sides, passes] = refine(g, c, subset, split(order), options.scan, trace);
      total_passes += passes;
      const double cut = bisection_cut(c, sides);
      if (best_sides.empty() || cut < best_cut) {
        best_sides = std::move(sides);
        best_cut = cut;
      }
    }
  }

  IndexBisection out;
  for (std::size_t i = 0; i < n; ++i) {
    (best_sides[i] == Side::A ? out.a : out.b).push_back(subset[i]);
  }
  out.cut = best_cut;
  out.passes = total_passes;
  return out;
}

}  // namespace

Bisection kl_bisect(const AffinityGraph& g, std::span<const ServiceId> vertices,
                    const KlOptions& options, BisectTrace* trace) {
  std::vector<std::size_t> subset;
  subset.reserve(vertices.size());
  for (const auto& id : vertices) subset.push_back(g.index_of(id));
  std::sort(subset.begin(), subset.end());
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
    throw Error(ErrorCode::InvalidPartition, "duplicate vertex in bisection input");
  }
  auto result = bisect_indices(g, subset, options, trace);
  Bisection out;
  for (auto i : result.a) out.a.push_back(g.vertices()[i]);
  for (auto i : result.b) out.b.push_back(g.vertices()[i]);
  out.cut = result.cut;
  return out;
}

Partition partition_k(const AffinityGraph& g, int k, const KlOptions& options,
                      PartitionStats* stats) {
  if (k <= 0) throw Error(ErrorCode::KNonPositive, "k must be positive");
  const std::size_t n = g.vertex_count();
  if (static_cast<std::size_t>(k) > n) {
    throw Error(ErrorCode::KTooLarge,
                "k=" + std::to_string(k) + " exceeds vertex count " + std::to_string(n));
  }

  std::vector<std::vector<std::size_t>> subsets(1);
  subsets[0].resize(n);
  std::iota(subsets[0].begin(), subsets[0].end(), std::size_t{0});

  PartitionStats local;
  while (subsets.size() < static_cast<std::size_t>(k)) {
    // Largest subset; ties go to the one with the smallest first member.
    std::size_t largest = 0;
    for (std::size_t i = 1; i < subsets.size(); ++i) {
      const auto& s = subsets[i];
      const auto& best = subsets[largest];
      if (s.size() > best.size() || (s.size() == best.size() && s.front() < best.front())) {
        largest = i;
      }
    }
    auto halves = bisect_indices(g, subsets[largest], options, nullptr);
    ++local.bisections;
    local.passes += halves.passes;
    subsets[largest] = std::move(halves.a);
    subsets.insert(subsets.begin() + static_cast<long>(largest) + 1, std::move(halves.b));
  }

  Partition p;
  for (const auto& s : subsets) {
    auto& out = p.subsets.emplace_back();
    for (auto i : s) out.push_back(g.vertices()[i]);
  }
  p.canonicalize();
  if (stats) *stats = local;
  return p;
}

}  // namespace saga
