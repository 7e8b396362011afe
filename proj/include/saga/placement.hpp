#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "saga/graph.hpp"
#include "saga/ids.hpp"
#include "saga/ingest.hpp"
#include "saga/partition_types.hpp"

namespace saga {

struct Placement {
  std::vector<NodeId> nodes;
  std::map<ServiceId, NodeId> assignment;

  // Throws InvalidPlacement on duplicate/empty nodes or assignments to
  // nodes not listed.
  void validate() const;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct Move {
  ServiceId service;
  NodeId from;
  NodeId to;

  friend bool operator==(const Move&, const Move&) = default;
};

struct MigrationPlan {
  std::vector<Move> moves;  // ordered by service
  std::size_t unchanged_count = 0;

  friend bool operator==(const MigrationPlan&, const MigrationPlan&) = default;
};

// Per-message latency of a local (same node) vs remote exchange.
struct LatencyModel {
  double local_ms = 0.5;
  double remote_ms = 5.0;

  // Throws InvalidLatencyModel unless remote_ms >= local_ms >= 0.
  void validate() const;

  friend bool operator==(const LatencyModel&, const LatencyModel&) = default;
};

struct PairTraffic {
  ServicePair pair;
  std::uint64_t bytes = 0;
  std::uint64_t messages = 0;
  bool local = false;

  friend bool operator==(const PairTraffic&, const PairTraffic&) = default;
};

struct SimReport {
  std::uint64_t inter_node_bytes = 0;
  std::uint64_t intra_node_bytes = 0;
  double cut_weight = 0.0;
  double est_mean_latency_ms = 0.0;
  std::vector<PairTraffic> per_pair;

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

// Percent reductions from `before` to `after`; nullopt marks an undefined
// value (zero baseline).
struct ImprovementReport {
  std::optional<double> latency_delta_pct;
  std::optional<double> inter_bytes_delta_pct;
  std::optional<double> cut_delta_pct;

  friend bool operator==(const ImprovementReport&, const ImprovementReport&) = default;
};

// Subset i goes to nodes[i]. Throws NodeCountMismatch unless sizes agree.
Placement assign_clusters(const Partition& p, const std::vector<NodeId>& nodes);

// Throws ServiceSetMismatch unless both placements cover the same services.
MigrationPlan plan_migration(const Placement& current, const Placement& target);

// Applies `plan` to `current`. Throws InvalidPlacement if a move's origin
// does not match.
Placement apply_plan(const Placement& current, const MigrationPlan& plan,
                     const std::vector<NodeId>& target_nodes);

// Partition of services by node, empty nodes dropped.
Partition induced_partition(const Placement& pl);

// Throws UnassignedService if a window service or graph vertex has no node.
SimReport simulate(const Placement& pl, const MetricsWindow& win, const AffinityGraph& g,
                   const LatencyModel& model);

ImprovementReport compare(const SimReport& before, const SimReport& after);

// Round-robin assignment of the sorted services to nodes.
Placement round_robin_placement(const std::vector<ServiceId>& services,
                                const std::vector<NodeId>& nodes);

}  // namespace saga
