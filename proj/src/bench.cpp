#include "saga/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "saga/error.hpp"

namespace saga {

AffinityGraph random_affinity_graph(std::size_t n, double edge_probability,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<ServiceId> vertices;
  vertices.reserve(n);
  char name[32];
  for (std::size_t i = 0; i < n; ++i) {
    std::snprintf(name, sizeof name, "svc%04zu", i);
    vertices.emplace_back(name);
  }
  std::map<ServicePair, double> raw;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (unit(rng) < edge_probability) raw.emplace(ServicePair(vertices[i], vertices[j]), unit(rng));
    }
  }
  return graph_from_raw(std::move(vertices), raw);
}

std::vector<BenchRow> run_bench(const BenchSpec& spec) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  for (std::size_t n : spec.n_values) {
    const auto g = random_affinity_graph(n, spec.edge_probability, spec.seed + n);
    for (int k : spec.k_values) {
      if (k <= 0) throw Error(ErrorCode::KNonPositive, "bench k must be positive");
      if (static_cast<std::size_t>(k) > n) {
        throw Error(ErrorCode::KTooLarge, "bench cell has k > n");
      }
      std::vector<double> times;
      BenchRow row{n, k, 0.0, 0, 0.0};
      for (int r = 0; r < std::max(1, spec.repeats); ++r) {
        PartitionStats stats;
        const auto start = clock::now();
        const auto p = partition_k(g, k, spec.kl, &stats);
        const auto stop = clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        row.bisection_count = stats.bisections;
        row.cut_weight = total_cut_weight(g, p);
      }
      std::sort(times.begin(), times.end());
      row.runtime_ms = times[times.size() / 2];
      rows.push_back(row);
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "n,k,runtime_ms,bisection_count,cut_weight\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.k << ',' << r.runtime_ms << ',' << r.bisection_count << ','
       << r.cut_weight << '\n';
  }
  return os.str();
}

}  // namespace saga
