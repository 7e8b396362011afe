#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "saga/affinity.hpp"
#include "saga/gain_scan.hpp"
#include "saga/ingest.hpp"
#include "saga/placement.hpp"

namespace saga {

struct Config {
  AffinityWeights weights;
  std::optional<int> k;
  std::optional<Timestamp> window_start;
  std::optional<Timestamp> window_end;
  std::vector<NodeId> nodes;
  LatencyModel latency;
  std::optional<std::uint64_t> seed;
  int restarts = 1;
  TraceFormat trace_format = TraceFormat::Jsonl;
  bool lenient = false;
  ScanMode scan = ScanMode::Parallel;
  int threads = 0;

  // Throws InvalidConfig / InvalidWeights / InvalidLatencyModel.
  void validate() const;
};

// Unknown keys are rejected so typos do not silently fall back to defaults.
Config config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Config& c);

}  // namespace saga
