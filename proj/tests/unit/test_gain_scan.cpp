#include <doctest.h>

#include <omp.h>

#include <random>

#include "saga/gain_scan.hpp"

using namespace saga;

namespace {

struct Input {
  DenseWeights c;
  std::vector<double> d;
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
};

Input random_input(std::mt19937_64& rng, std::size_t n, bool coarse) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> small(0, 3);
  Input in{DenseWeights(n), std::vector<double>(n), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Coarse values force many exact gain ties.
      if (unit(rng) < 0.3) in.c.set(i, j, coarse ? small(rng) * 0.5 : unit(rng));
    }
    in.d[i] = coarse ? small(rng) : unit(rng);
    (unit(rng) < 0.5 ? in.a : in.b).push_back(i);
  }
  return in;
}

}  // namespace

TEST_CASE("serial scan picks max gain with lexicographic tie-break") {
  DenseWeights c(4);
  c.set(0, 1, 1.0);
  c.set(1, 2, 0.1);
  c.set(2, 3, 1.0);
  std::vector<double> d{1.0, 1.1, 1.1, 1.0};
  std::vector<std::size_t> a{0, 2}, b{1, 3};
  auto best = best_swap_serial(c, d, a, b);
  CHECK(best.valid);
  CHECK(best.a == 0);
  CHECK(best.b == 3);
  CHECK(best.gain == 2.0);
}

TEST_CASE("empty candidate sets yield no swap") {
  DenseWeights c(2);
  std::vector<double> d{0.0, 0.0};
  std::vector<std::size_t> a{0}, none;
  CHECK_FALSE(best_swap_serial(c, d, a, none).valid);
  CHECK_FALSE(best_swap_parallel(c, d, a, none).valid);
}

TEST_CASE("parallel scan matches the serial reference bit for bit") {
  std::mt19937_64 rng(21);
  const int saved = omp_get_max_threads();
  for (int threads : {1, 2, 3, 4, 7}) {
    omp_set_num_threads(threads);
    for (int trial = 0; trial < 20; ++trial) {
      const bool coarse = trial % 2 == 0;
      auto in = random_input(rng, trial < 10 ? 40 : 260, coarse);
      auto s = best_swap_serial(in.c, in.d, in.a, in.b);
      auto p = best_swap_parallel(in.c, in.d, in.a, in.b);
      CHECK(s.valid == p.valid);
      CHECK(s.a == p.a);
      CHECK(s.b == p.b);
      CHECK(s.gain == p.gain);
    }
  }
  omp_set_num_threads(saved);
}
