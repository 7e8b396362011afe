#include "saga/config.hpp"

#include <set>
#include <string>

#include "saga/error.hpp"

namespace saga {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorCode::InvalidConfig, why); }

void only_keys(const json& j, std::initializer_list<const char*> allowed, const char* where) {
  if (!j.is_object()) invalid(std::string(where) + " must be an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : j.items()) {
    if (!ok.contains(key)) invalid(std::string("unknown key '") + key + "' in " + where);
  }
}

}  // namespace

void Config::validate() const {
  weights.validate();
  latency.validate();
  if (k && *k <= 0) throw Error(ErrorCode::KNonPositive, "k must be positive");
  if (window_start && window_end && *window_end <= *window_start) {
    throw Error(ErrorCode::InvalidWindow, "window end must be greater than start");
  }
  std::set<NodeId> seen;
  for (const auto& n : nodes) {
    if (n.empty()) invalid("empty node name");
    if (!seen.insert(n).second) invalid("duplicate node " + n.str());
  }
  if (k && !nodes.empty() && nodes.size() != static_cast<std::size_t>(*k)) {
    throw Error(ErrorCode::NodeCountMismatch, "config lists " + std::to_string(nodes.size()) +
                                                  " nodes for k=" + std::to_string(*k));
  }
  if (restarts < 1) invalid("restarts must be >= 1");
  if (threads < 0) invalid("threads must be >= 0");
}

Config config_from_json(const json& j) {
  Config c;
  try {
    only_keys(j, {"weights", "k", "window", "nodes", "latency_model", "seed", "restarts",
                  "trace_format", "lenient", "scan", "threads"},
              "config");
    if (j.contains("weights")) {
      const auto& w = j["weights"];
      only_keys(w, {"data", "privacy", "coupling", "functional", "operational"}, "weights");
      c.weights.data = w.value("data", 1.0);
      c.weights.privacy = w.value("privacy", 1.0);
      c.weights.coupling = w.value("coupling", 1.0);
      c.weights.functional = w.value("functional", 1.0);
      c.weights.operational = w.value("operational", 1.0);
    }
    if (j.contains("k")) c.k = j["k"].get<int>();
    if (j.contains("window")) {
      const auto& w = j["window"];
      only_keys(w, {"start", "end"}, "window");
      if (w.contains("start")) c.window_start = w["start"].get<Timestamp>();
      if (w.contains("end")) c.window_end = w["end"].get<Timestamp>();
    }
    if (j.contains("nodes")) {
      for (const auto& n : j["nodes"]) c.nodes.emplace_back(n.get<std::string>());
    }
    if (j.contains("latency_model")) {
      const auto& m = j["latency_model"];
      only_keys(m, {"local_ms", "remote_ms"}, "latency_model");
      c.latency.local_ms = m.value("local_ms", c.latency.local_ms);
      c.latency.remote_ms = m.value("remote_ms", c.latency.remote_ms);
    }
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    c.restarts = j.value("restarts", 1);
    if (j.contains("trace_format")) {
      const auto f = j["trace_format"].get<std::string>();
      if (f == "jsonl") {
        c.trace_format = TraceFormat::Jsonl;
      } else if (f == "csv") {
        c.trace_format = TraceFormat::Csv;
      } else {
        invalid("trace_format must be jsonl or csv");
      }
    }
    c.lenient = j.value("lenient", false);
    if (j.contains("scan")) {
      const auto s = j["scan"].get<std::string>();
      if (s == "serial") {
        c.scan = ScanMode::Serial;
      } else if (s == "parallel") {
        c.scan = ScanMode::Parallel;
      } else {
        invalid("scan must be serial or parallel");
      }
    }
    c.threads = j.value("threads", 0);
  } catch (const json::exception& e) {
    invalid(std::string("config: ") + e.what());
  }
  return c;
}

json to_json(const Config& c) {
  json j = {{"weights",
             {{"data", c.weights.data},
              {"privacy", c.weights.privacy},
              {"coupling", c.weights.coupling},
              {"functional", c.weights.functional},
              {"operational", c.weights.operational}}},
            {"latency_model",
             {{"local_ms", c.latency.local_ms}, {"remote_ms", c.latency.remote_ms}}},
            {"restarts", c.restarts},
            {"trace_format", c.trace_format == TraceFormat::Jsonl ? "jsonl" : "csv"},
            {"lenient", c.lenient},
            {"scan", c.scan == ScanMode::Serial ? "serial" : "parallel"},
            {"threads", c.threads}};
  if (c.k) j["k"] = *c.k;
  if (c.window_start || c.window_end) {
    j["window"] = json::object();
    if (c.window_start) j["window"]["start"] = *c.window_start;
    if (c.window_end) j["window"]["end"] = *c.window_end;
  }
  if (!c.nodes.empty()) {
    j["nodes"] = json::array();
    for (const auto& n : c.nodes) j["nodes"].push_back(n.str());
  }
  if (c.seed) j["seed"] = *c.seed;
  return j;
}

}  // namespace saga
