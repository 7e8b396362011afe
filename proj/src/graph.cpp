#include "saga/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "saga/error.hpp"

namespace saga {

AffinityGraph::AffinityGraph(std::vector<ServiceId> vertices,
                             std::map<ServicePair, EdgeData> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].empty()) throw Error(ErrorCode::SchemaViolation, "empty vertex name");
    if (i > 0 && !(vertices_[i - 1] < vertices_[i])) {
      throw Error(ErrorCode::SchemaViolation, "vertices must be sorted and unique");
    }
  }
  adjacency_.resize(vertices_.size());
  for (const auto& [pair, edge] : edges_) {
    if (!(edge.weight >= 0.0 && edge.weight <= 1.0)) {
      throw Error(ErrorCode::SchemaViolation, "edge weight outside [0,1]");
    }
    auto a = find(pair.first());
    auto b = find(pair.second());
    if (!a || !b) {
      throw Error(ErrorCode::UnknownVertex, "edge endpoint not a vertex: " +
                                                pair.first().str() + "-" + pair.second().str());
    }
    adjacency_[*a].push_back({*b, edge.weight});
    adjacency_[*b].push_back({*a, edge.weight});
    total_weight_ += edge.weight;
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& x, const Neighbor& y) { return x.vertex < y.vertex; });
  }
}

std::optional<std::size_t> AffinityGraph::find(const ServiceId& id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || !(*it == id)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t AffinityGraph::index_of(const ServiceId& id) const {
  auto idx = find(id);
  if (!idx) throw Error(ErrorCode::UnknownVertex, "unknown vertex: " + id.str());
  return *idx;
}

DenseWeights::DenseWeights(const AffinityGraph& g, std::span<const std::size_t> subset)
    : DenseWeights(subset.size()) {
  constexpr auto kAbsent = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> local(g.vertex_count(), kAbsent);
  for (std::size_t i = 0; i < subset.size(); ++i) local[subset[i]] = i;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (const auto& nb : g.neighbors(subset[i])) {
      if (local[nb.vertex] != kAbsent) data_[i * n_ + local[nb.vertex]] = nb.weight;
    }
  }
}

void normalize_weights(std::map<ServicePair, EdgeData>& edges) {
  if (edges.empty()) return;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& [_, e] : edges) {
    lo = std::min(lo, e.raw_affinity);
    hi = std::max(hi, e.raw_affinity);
  }
  const double range = hi - lo;
  for (auto& [_, e] : edges) {
    e.weight = range > 0.0 ? (e.raw_affinity - lo) / range : 1.0;
  }
}

AffinityGraph build_graph(const MetricsWindow& win, const MetaMap& meta,
                          const AffinityWeights& weights) {
  weights.validate();
  std::map<ServicePair, EdgeData> edges;
  for (const auto& [pair, _] : win.pair_messages) {
    EdgeData e;
    e.breakdown = combined_affinity(pair.first(), pair.second(), win, meta, weights);
    e.raw_affinity = e.breakdown.combined;
    edges.emplace(pair, e);
  }
  normalize_weights(edges);
  std::vector<ServiceId> vertices(win.services.begin(), win.services.end());
  return AffinityGraph(std::move(vertices), std::move(edges));
}

AffinityGraph graph_from_raw(std::vector<ServiceId> vertices,
                             const std::map<ServicePair, double>& raw) {
  std::sort(vertices.begin(), vertices.end());
  std::map<ServicePair, EdgeData> edges;
  for (const auto& [pair, a] : raw) {
    EdgeData e;
    e.raw_affinity = a;
    e.breakdown.combined = a;
    edges.emplace(pair, e);
  }
  normalize_weights(edges);
  return AffinityGraph(std::move(vertices), std::move(edges));
}

double edge_weight(const AffinityGraph& g, const ServiceId& u, const ServiceId& v) {
  g.index_of(u);
  g.index_of(v);
  auto it = g.edges().find(ServicePair(u, v));
  return it == g.edges().end() ? 0.0 : it->second.weight;
}

CutSummary cut_summary(const AffinityGraph& g, const Partition& p) {
  validate_partition(p, g.vertices());
  std::vector<std::size_t> label(g.vertex_count());
  for (std::size_t s = 0; s < p.subsets.size(); ++s) {
    for (const auto& id : p.subsets[s]) label[g.index_of(id)] = s;
  }
  CutSummary out;
  for (const auto& [pair, e] : g.edges()) {
    if (label[g.index_of(pair.first())] != label[g.index_of(pair.second())]) {
      out.cut_weight += e.weight;
    } else {
      out.internal_weight += e.weight;
    }
  }
  return out;
}

double total_cut_weight(const AffinityGraph& g, const Partition& p) {
  return cut_summary(g, p).cut_weight;
}

}  // namespace saga
