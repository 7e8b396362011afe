#pragma once

// Shared test fixtures: hand-built graphs, random pipeline-built graphs and
// brute-force reference computations that do not go through the code under
// test.

#include <cstdint>
#include <filesystem>
#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "saga/graph.hpp"
#include "saga/ingest.hpp"

namespace saga::testing {

inline std::vector<ServiceId> ids(std::initializer_list<const char*> names) {
  std::vector<ServiceId> out;
  for (auto n : names) out.emplace_back(n);
  return out;
}

using WeightedEdge = std::tuple<const char*, const char*, double>;

// Graph with the given weights taken as already normalized.
inline AffinityGraph weighted_graph(std::initializer_list<const char*> vertices,
                                    std::initializer_list<WeightedEdge> edges) {
  std::vector<ServiceId> vs = ids(vertices);
  std::sort(vs.begin(), vs.end());
  std::map<ServicePair, EdgeData> es;
  for (const auto& [u, v, w] : edges) {
    EdgeData e;
    e.raw_affinity = w;
    e.weight = w;
    e.breakdown.combined = w;
    es.emplace(ServicePair(ServiceId(u), ServiceId(v)), e);
  }
  return AffinityGraph(std::move(vs), std::move(es));
}

// Path a-b-c-d with weights 1, 0.1, 1.
inline AffinityGraph path4() {
  return weighted_graph({"a", "b", "c", "d"}, {{"a", "b", 1.0}, {"b", "c", 0.1}, {"c", "d", 1.0}});
}

// Triangles {a,b,c} and {d,e,f} (weight 1) joined by c-d (weight 0.1).
inline AffinityGraph two_triangles() {
  return weighted_graph({"a", "b", "c", "d", "e", "f"},
                        {{"a", "b", 1.0},
                         {"a", "c", 1.0},
                         {"b", "c", 1.0},
                         {"d", "e", 1.0},
                         {"d", "f", 1.0},
                         {"e", "f", 1.0},
                         {"c", "d", 0.1}});
}

inline std::string svc_name(std::size_t i) {
  return "s" + std::string(i < 10 ? "0" : "") + std::to_string(i);
}

// Random traffic window over n services: each pair talks with probability
// `density`, with random bytes and message counts.
inline MetricsWindow random_window(std::mt19937_64& rng, std::size_t n, double density) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::uint64_t> bytes(0, 5000);
  std::uniform_int_distribution<std::uint64_t> count(1, 40);
  std::vector<MessageRecord> records;
  std::set<ServiceId> declared;
  for (std::size_t i = 0; i < n; ++i) declared.emplace(svc_name(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (unit(rng) >= density) continue;
      records.push_back({ServiceId(svc_name(i)), ServiceId(svc_name(j)), bytes(rng), count(rng),
                         static_cast<Timestamp>(i * n + j)});
    }
  }
  return aggregate(records, 0, static_cast<Timestamp>(n * n + 1), declared);
}

// Random tags drawn from small vocabularies, some absent.
inline MetaMap random_meta(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> pick(0, 3);
  auto tag = [&](const char* prefix) -> std::optional<std::string> {
    int t = pick(rng);
    if (t == 0) return std::nullopt;
    return std::string(prefix) + std::to_string(t);
  };
  MetaMap meta;
  for (std::size_t i = 0; i < n; ++i) {
    ServiceId id(svc_name(i));
    meta[id] = ServiceMeta{id, tag("p"), tag("f"), tag("o")};
  }
  return meta;
}

inline AffinityGraph random_graph(std::mt19937_64& rng, std::size_t n, double density = 0.6) {
  auto win = random_window(rng, n, density);
  auto meta = random_meta(rng, n);
  return build_graph(win, meta, AffinityWeights{});
}

// Brute-force weight of edges between `side_a` and everything else in
// `members`, looked up pair by pair through the graph's edge map.
inline double reference_cut(const AffinityGraph& g, const std::vector<ServiceId>& members,
                            const std::set<ServiceId>& side_a) {
  double cut = 0.0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (side_a.contains(members[i]) == side_a.contains(members[j])) continue;
      auto it = g.edges().find(ServicePair(members[i], members[j]));
      if (it != g.edges().end()) cut += it->second.weight;
    }
  }
  return cut;
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("saga_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace saga::testing
