#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "saga/graph.hpp"
#include "saga/partition.hpp"

namespace saga {

// Random graph on n services ("svc0000", ...): each pair is an edge with
// probability edge_probability, raw affinity uniform in [0,1), then
// min-max normalized like any affinity graph.
AffinityGraph random_affinity_graph(std::size_t n, double edge_probability,
                                    std::uint64_t seed);

struct BenchRow {
  std::size_t n = 0;
  int k = 0;
  double runtime_ms = 0.0;  // median over repeats
  int bisection_count = 0;
  double cut_weight = 0.0;
};

struct BenchSpec {
  std::vector<std::size_t> n_values;
  std::vector<int> k_values;
  int repeats = 3;
  double edge_probability = 0.1;
  std::uint64_t seed = 1;
  KlOptions kl;
};

// Times partition_k on every (n, k) cell. Cells run one after another;
// one graph per n is shared across its k values.
std::vector<BenchRow> run_bench(const BenchSpec& spec);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace saga
