#include "saga/gain_scan.hpp"

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace saga {

SwapCandidate best_swap_serial(const DenseWeights& c, std::span<const double> d,
                               std::span<const std::size_t> free_a,
                               std::span<const std::size_t> free_b) {
  SwapCandidate best;
  for (std::size_t a : free_a) {
    const auto row = c.row(a);
    for (std::size_t b : free_b) {
      SwapCandidate cand{d[a] + d[b] - 2.0 * row[b], a, b, true};
      if (better_swap(cand, best)) best = cand;
    }
  }
  return best;
}

SwapCandidate best_swap_parallel(const DenseWeights& c, std::span<const double> d,
                                 std::span<const std::size_t> free_a,
                                 std::span<const std::size_t> free_b) {
#ifdef _OPENMP
  const auto rows = static_cast<long>(free_a.size());
  const bool wide = free_a.size() * free_b.size() >= kParallelScanThreshold;
  SwapCandidate best;
#pragma omp parallel if (wide)
  {
    SwapCandidate local;
#pragma omp for schedule(static) nowait
    for (long i = 0; i < rows; ++i) {
      const std::size_t a = free_a[i];
      const auto row = c.row(a);
      for (std::size_t b : free_b) {
        SwapCandidate cand{d[a] + d[b] - 2.0 * row[b], a, b, true};
        if (better_swap(cand, local)) local = cand;
      }
    }
#pragma omp critical(saga_best_swap)
    {
      if (better_swap(local, best)) best = local;
    }
  }
  return best;
#else
  return best_swap_serial(c, d, free_a, free_b);
#endif
}

}  // namespace saga

namespace saga {

void set_scan_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

int scan_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace saga
