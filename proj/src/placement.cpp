#include "saga/placement.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "saga/error.hpp"

namespace saga {

void Placement::validate() const {
  std::set<NodeId> known;
  for (const auto& n : nodes) {
    if (n.empty()) throw Error(ErrorCode::InvalidPlacement, "empty node name");
    if (!known.insert(n).second) {
      throw Error(ErrorCode::InvalidPlacement, "duplicate node: " + n.str());
    }
  }
  for (const auto& [svc, node] : assignment) {
    if (svc.empty()) throw Error(ErrorCode::InvalidPlacement, "empty service name");
    if (!known.contains(node)) {
      throw Error(ErrorCode::InvalidPlacement,
                  "service " + svc.str() + " assigned to unknown node " + node.str());
    }
  }
}

void LatencyModel::validate() const {
  if (!std::isfinite(local_ms) || !std::isfinite(remote_ms) || local_ms < 0.0 ||
      remote_ms < local_ms) {
    throw Error(ErrorCode::InvalidLatencyModel, "latency model needs remote_ms >= local_ms >= 0");
  }
}

Placement assign_clusters(const Partition& p, const std::vector<NodeId>& nodes) {
  if (nodes.size() != p.k()) {
    throw Error(ErrorCode::NodeCountMismatch, std::to_string(p.k()) + " clusters but " +
                                                  std::to_string(nodes.size()) + " nodes");
  }
  Placement pl;
  pl.nodes = nodes;
  for (std::size_t i = 0; i < p.subsets.size(); ++i) {
    for (const auto& svc : p.subsets[i]) pl.assignment[svc] = nodes[i];
  }
  pl.validate();
  return pl;
}

MigrationPlan plan_migration(const Placement& current, const Placement& target) {
  if (current.assignment.size() != target.assignment.size() ||
      !std::equal(current.assignment.begin(), current.assignment.end(),
                  target.assignment.begin(),
                  [](const auto& x, const auto& y) { return x.first == y.first; })) {
    throw Error(ErrorCode::ServiceSetMismatch, "placements cover different services");
  }
  MigrationPlan plan;
  auto tit = target.assignment.begin();
  for (const auto& [svc, from] : current.assignment) {
    const auto& to = (tit++)->second;
    if (from == to) {
      ++plan.unchanged_count;
    } else {
      plan.moves.push_back({svc, from, to});
    }
  }
  return plan;
}

Placement apply_plan(const Placement& current, const MigrationPlan& plan,
                     const std::vector<NodeId>& target_nodes) {
  Placement out{target_nodes, current.assignment};
  for (const auto& m : plan.moves) {
    auto it = out.assignment.find(m.service);
    if (it == out.assignment.end() || !(it->second == m.from)) {
      throw Error(ErrorCode::InvalidPlacement, "move does not match placement: " +
                                                   m.service.str());
    }
    it->second = m.to;
  }
  out.validate();
  return out;
}

Partition induced_partition(const Placement& pl) {
  std::map<NodeId, std::vector<ServiceId>> by_node;
  for (const auto& [svc, node] : pl.assignment) by_node[node].push_back(svc);
  Partition p;
  for (auto& [_, members] : by_node) p.subsets.push_back(std::move(members));
  p.canonicalize();
  return p;
}

SimReport simulate(const Placement& pl, const MetricsWindow& win, const AffinityGraph& g,
                   const LatencyModel& model) {
  model.validate();
  auto node_of = [&](const ServiceId& s) -> const NodeId& {
    auto it = pl.assignment.find(s);
    if (it == pl.assignment.end()) {
      throw Error(ErrorCode::UnassignedService, "service has no node: " + s.str());
    }
    return it->second;
  };
  for (const auto& s : win.services) node_of(s);
  for (const auto& s : g.vertices()) node_of(s);

  SimReport r;
  double weighted_ms = 0.0;
  for (const auto& [pair, messages] : win.pair_messages) {
    const bool local = node_of(pair.first()) == node_of(pair.second());
    const std::uint64_t bytes = win.bytes(pair);
    (local ? r.intra_node_bytes : r.inter_node_bytes) += bytes;
    weighted_ms += static_cast<double>(messages) * (local ? model.local_ms : model.remote_ms);
    r.per_pair.push_back({pair, bytes, messages, local});
  }
  r.est_mean_latency_ms =
      win.total_messages > 0 ? weighted_ms / static_cast<double>(win.total_messages) : 0.0;

  // Restrict the induced partition to graph vertices so extra placed
  // services do not invalidate the cut.
  Placement on_graph{pl.nodes, {}};
  for (const auto& v : g.vertices()) on_graph.assignment[v] = node_of(v);
  r.cut_weight = g.vertex_count() == 0 ? 0.0 : total_cut_weight(g, induced_partition(on_graph));
  return r;
}

namespace {

std::optional<double> reduction_pct(double before, double after) {
  if (before == 0.0) return std::nullopt;
  return 100.0 * (before - after) / before;
}

}  // namespace

ImprovementReport compare(const SimReport& before, const SimReport& after) {
  return {
      reduction_pct(before.est_mean_latency_ms, after.est_mean_latency_ms),
      reduction_pct(static_cast<double>(before.inter_node_bytes),
                    static_cast<double>(after.inter_node_bytes)),
      reduction_pct(before.cut_weight, after.cut_weight),
  };
}

Placement round_robin_placement(const std::vector<ServiceId>& services,
                                const std::vector<NodeId>& nodes) {
  if (nodes.empty()) throw Error(ErrorCode::InvalidPlacement, "no nodes");
  std::vector<ServiceId> sorted(services);
  std::sort(sorted.begin(), sorted.end());
  Placement pl{nodes, {}};
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    pl.assignment[sorted[i]] = nodes[i % nodes.size()];
  }
  pl.validate();
  return pl;
}

}  // namespace saga
