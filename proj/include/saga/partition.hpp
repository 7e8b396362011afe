#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "saga/gain_scan.hpp"
#include "saga/graph.hpp"
#include "saga/partition_types.hpp"

namespace saga {

enum class Side : std::uint8_t { A, B };

// Bookkeeping of one Kernighan-Lin pass, in local vertex indices.
struct PassState {
  std::vector<double> d;  // external minus internal cost per vertex
  std::vector<double> gv;
  std::vector<std::size_t> av;
  std::vector<std::size_t> bv;
  std::vector<bool> locked;
  double g_max = 0.0;
  std::size_t t = 0;  // number of leading swaps kept; 0 when nothing improves
};

// Passes with a best prefix gain at or below this are treated as g_max <= 0.
inline constexpr double kGainEpsilon = 1e-12;
inline constexpr int kMaxPasses = 100;

// One KL pass over a fixed bisection. Drive it with begin(), then step()
// until steps_remaining() is zero, then finish().
class KlPass {
 public:
  KlPass(const DenseWeights& c, std::vector<Side> sides, ScanMode mode = ScanMode::Serial);

  // Recomputes D from scratch for the current sides and clears the pass.
  void begin();

  std::size_t steps_remaining() const noexcept { return steps_left_; }

  // Picks the best unlocked pair, records it, locks both and updates D as
  // if the pair were already exchanged.
  SwapCandidate step();

  // Chooses t maximizing the prefix sum of gv and, when g_max is positive,
  // exchanges the first t pairs. Returns whether the swap was applied.
  bool finish();

  const PassState& state() const noexcept { return state_; }
  const std::vector<Side>& sides() const noexcept { return sides_; }
  std::span<const std::size_t> free_a() const noexcept { return free_a_; }
  std::span<const std::size_t> free_b() const noexcept { return free_b_; }

  // D[x] recomputed from the definition for `sides`.
  static double d_value(const DenseWeights& c, std::span<const Side> sides, std::size_t x);

 private:
  const DenseWeights& c_;
  std::vector<Side> sides_;
  ScanMode mode_;
  PassState state_;
  std::vector<std::size_t> free_a_;
  std::vector<std::size_t> free_b_;
  std::size_t steps_left_ = 0;
};

// Cut weight between the two sides.
double bisection_cut(const DenseWeights& c, std::span<const Side> sides);

struct KlOptions {
  ScanMode scan = ScanMode::Serial;
  // When set, seed bisections come from shuffling with this seed and the
  // best of `restarts` runs is kept. Otherwise the sorted split is used.
  std::optional<std::uint64_t> seed;
  int restarts = 1;
};

struct PassRecord {
  std::vector<ServiceId> a_before;
  std::vector<ServiceId> a_after;
  std::vector<double> gv;
  std::vector<ServiceId> av;
  std::vector<ServiceId> bv;
  std::size_t t = 0;
  double g_max = 0.0;
  bool accepted = false;
};

struct BisectTrace {
  std::vector<PassRecord> passes;
};

struct Bisection {
  std::vector<ServiceId> a;  // ceil(n/2) vertices, sorted
  std::vector<ServiceId> b;  // floor(n/2) vertices, sorted
  double cut = 0.0;
};

// Balanced KL bisection of `vertices` (a subset of g's vertices).
// Throws TooFewVertices below two vertices, UnknownVertex for foreign ids.
Bisection kl_bisect(const AffinityGraph& g, std::span<const ServiceId> vertices,
                    const KlOptions& options = {}, BisectTrace* trace = nullptr);

struct PartitionStats {
  int bisections = 0;
  int passes = 0;
};

// Repeatedly bisects the largest subset until k subsets exist.
Partition partition_k(const AffinityGraph& g, int k, const KlOptions& options = {},
                      PartitionStats* stats = nullptr);

}  // namespace saga
