#pragma once

#include <filesystem>
#include <json.hpp>
#include <string>

#include "saga/graph.hpp"
#include "saga/ingest.hpp"
#include "saga/partition_types.hpp"
#include "saga/placement.hpp"

namespace saga::io {

using nlohmann::json;

// Readers throw Error{SchemaViolation} on any structural mismatch.

json to_json(const MetricsWindow& win);
MetricsWindow window_from_json(const json& j);

json to_json(const AffinityGraph& g);
AffinityGraph graph_from_json(const json& j);

// Includes cut_weight and internal_weight computed against `g`.
json to_json(const Partition& p, const AffinityGraph& g);
Partition partition_from_json(const json& j);

json to_json(const Placement& pl);
Placement placement_from_json(const json& j);

json to_json(const MigrationPlan& plan);
MigrationPlan plan_from_json(const json& j);

json to_json(const SimReport& r);
SimReport sim_report_from_json(const json& j);

json to_json(const ImprovementReport& r);

// Graphviz rendering: edge pen width follows the normalized weight; with a
// partition, each subset becomes a cluster.
std::string to_dot(const AffinityGraph& g, const Partition* p = nullptr);

// Header plus one row per report.
std::string compare_csv(const SimReport& before, const SimReport& after);

// Stable text form used for every JSON artifact (2-space indent, newline).
std::string dump(const json& j);

json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace saga::io
