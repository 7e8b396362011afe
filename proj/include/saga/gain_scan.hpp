#pragma once

#include <cstddef>
#include <span>

#include "saga/graph.hpp"

namespace saga {

enum class ScanMode { Serial, Parallel };

// A tentative KL swap of local vertex `a` (side A) with `b` (side B).
struct SwapCandidate {
  double gain = 0.0;
  std::size_t a = 0;
  std::size_t b = 0;
  bool valid = false;
};

// Total order used to pick the swap: higher gain first, then smaller a,
// then smaller b. Both kernels select the maximum under this order, so
// they agree bit for bit.
inline bool better_swap(const SwapCandidate& x, const SwapCandidate& y) {
  if (!y.valid) return x.valid;
  if (!x.valid) return false;
  if (x.gain != y.gain) return x.gain > y.gain;
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

// Maximizes D[a] + D[b] - 2 c(a,b) over free_a x free_b. Both index lists
// must be sorted ascending.
SwapCandidate best_swap_serial(const DenseWeights& c, std::span<const double> d,
                               std::span<const std::size_t> free_a,
                               std::span<const std::size_t> free_b);

// OpenMP version of best_swap_serial. Falls back to a single thread below
// kParallelScanThreshold candidate pairs.
SwapCandidate best_swap_parallel(const DenseWeights& c, std::span<const double> d,
                                 std::span<const std::size_t> free_a,
                                 std::span<const std::size_t> free_b);

inline constexpr std::size_t kParallelScanThreshold = 4096;

inline SwapCandidate best_swap(ScanMode mode, const DenseWeights& c,
                               std::span<const double> d,
                               std::span<const std::size_t> free_a,
                               std::span<const std::size_t> free_b) {
  return mode == ScanMode::Serial ? best_swap_serial(c, d, free_a, free_b)
                                  : best_swap_parallel(c, d, free_a, free_b);
}

}  // namespace saga

namespace saga {

// Thread count for the parallel scan; 0 keeps the OpenMP default.
void set_scan_threads(int threads);
int scan_threads();

}  // namespace saga
