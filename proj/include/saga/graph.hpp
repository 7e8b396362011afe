#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "saga/affinity.hpp"
#include "saga/ids.hpp"
#include "saga/ingest.hpp"
#include "saga/partition_types.hpp"

namespace saga {

struct EdgeData {
  double raw_affinity = 0.0;
  double weight = 0.0;  // min-max normalized over all edges, in [0,1]
  AffinityBreakdown breakdown;

  friend bool operator==(const EdgeData&, const EdgeData&) = default;
};

struct Neighbor {
  std::size_t vertex;
  double weight;
};

// Undirected affinity graph. Vertices are sorted, so vertex indices follow
// lexicographic order of the service names. Immutable once built.
class AffinityGraph {
 public:
  AffinityGraph() = default;

  // Validates: sorted unique vertices, edge endpoints known, weights in [0,1].
  AffinityGraph(std::vector<ServiceId> vertices, std::map<ServicePair, EdgeData> edges);

  const std::vector<ServiceId>& vertices() const noexcept { return vertices_; }
  const std::map<ServicePair, EdgeData>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::optional<std::size_t> find(const ServiceId& id) const;
  std::size_t index_of(const ServiceId& id) const;  // throws UnknownVertex

  // Sorted by neighbor index.
  std::span<const Neighbor> neighbors(std::size_t v) const { return adjacency_[v]; }

  double total_weight() const noexcept { return total_weight_; }

  friend bool operator==(const AffinityGraph& a, const AffinityGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<ServiceId> vertices_;
  std::map<ServicePair, EdgeData> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  double total_weight_ = 0.0;
};

// Dense symmetric weight matrix over a vertex subset, indexed locally.
class DenseWeights {
 public:
  DenseWeights() = default;
  explicit DenseWeights(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  // Restriction of `g` to `subset` (global indices); local index i is
  // subset[i].
  DenseWeights(const AffinityGraph& g, std::span<const std::size_t> subset);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double w) noexcept {
    data_[i * n_ + j] = w;
    data_[j * n_ + i] = w;
  }
  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * n_, n_};
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// Edge per traffic pair in `win`; weight from min-max normalized combined
// affinity. When every edge has the same raw affinity all weights are 1.
AffinityGraph build_graph(const MetricsWindow& win, const MetaMap& meta,
                          const AffinityWeights& weights);

// Same normalization applied to caller-supplied raw affinities.
AffinityGraph graph_from_raw(std::vector<ServiceId> vertices,
                             const std::map<ServicePair, double>& raw);

// Rewrites each edge's weight from its raw_affinity.
void normalize_weights(std::map<ServicePair, EdgeData>& edges);

// Normalized weight of {u,v}, 0 when not adjacent.
double edge_weight(const AffinityGraph& g, const ServiceId& u, const ServiceId& v);

struct CutSummary {
  double cut_weight = 0.0;
  double internal_weight = 0.0;
};

// Throws InvalidPartition when `p` is not a disjoint cover of g's vertices.
CutSummary cut_summary(const AffinityGraph& g, const Partition& p);
double total_cut_weight(const AffinityGraph& g, const Partition& p);

}  // namespace saga
