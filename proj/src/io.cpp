#include "saga/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "saga/error.hpp"

namespace saga::io {

namespace {

[[noreturn]] void schema(const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, what);
}

// Runs a reader, turning nlohmann type/range errors into SchemaViolation.
template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    schema(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) schema("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing field '") + key + "'");
  return *it;
}

template <typename Id>
std::vector<Id> id_list(const json& j) {
  if (!j.is_array()) schema("expected an array of names");
  std::vector<Id> out;
  for (const auto& x : j) out.emplace_back(x.get<std::string>());
  return out;
}

template <typename Id>
json name_list(const std::vector<Id>& ids) {
  json out = json::array();
  for (const auto& id : ids) out.push_back(id.str());
  return out;
}

json breakdown_json(const AffinityBreakdown& b) {
  return {{"data", b.data},       {"privacy", b.privacy},         {"coupling", b.coupling},
          {"functional", b.functional}, {"operational", b.operational}, {"combined", b.combined}};
}

AffinityBreakdown breakdown_from(const json& j) {
  return {field(j, "data").get<double>(),       field(j, "privacy").get<double>(),
          field(j, "coupling").get<double>(),   field(j, "functional").get<double>(),
          field(j, "operational").get<double>(), field(j, "combined").get<double>()};
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json to_json(const MetricsWindow& win) {
  json pairs = json::array();
  for (const auto& [pair, messages] : win.pair_messages) {
    pairs.push_back({{"u", pair.first().str()},
                     {"v", pair.second().str()},
                     {"bytes", win.bytes(pair)},
                     {"messages", messages}});
  }
  json services = json::array();
  for (const auto& s : win.services) services.push_back(s.str());
  return {{"window_start", win.window_start},
          {"window_end", win.window_end},
          {"total_bytes", win.total_bytes},
          {"total_messages", win.total_messages},
          {"empty_window", win.empty_window},
          {"services", services},
          {"pairs", pairs}};
}

MetricsWindow window_from_json(const json& j) {
  auto win = guarded("window", [&] {
    MetricsWindow w;
    w.window_start = field(j, "window_start").get<Timestamp>();
    w.window_end = field(j, "window_end").get<Timestamp>();
    w.total_bytes = field(j, "total_bytes").get<std::uint64_t>();
    w.total_messages = field(j, "total_messages").get<std::uint64_t>();
    w.empty_window = field(j, "empty_window").get<bool>();
    for (const auto& s : id_list<ServiceId>(field(j, "services"))) w.services.insert(s);
    for (const auto& p : field(j, "pairs")) {
      ServicePair key(ServiceId(field(p, "u").get<std::string>()),
                      ServiceId(field(p, "v").get<std::string>()));
      if (w.pair_messages.contains(key)) schema("duplicate pair in window");
      w.pair_bytes[key] = field(p, "bytes").get<std::uint64_t>();
      w.pair_messages[key] = field(p, "messages").get<std::uint64_t>();
    }
    return w;
  });
  validate(win);
  return win;
}

json to_json(const AffinityGraph& g) {
  json edges = json::array();
  for (const auto& [pair, e] : g.edges()) {
    edges.push_back({{"u", pair.first().str()},
                     {"v", pair.second().str()},
                     {"raw", e.raw_affinity},
                     {"weight", e.weight},
                     {"breakdown", breakdown_json(e.breakdown)}});
  }
  return {{"vertices", name_list(g.vertices())}, {"edges", edges}};
}

AffinityGraph graph_from_json(const json& j) {
  return guarded("graph", [&] {
    auto vertices = id_list<ServiceId>(field(j, "vertices"));
    std::map<ServicePair, EdgeData> edges;
    for (const auto& e : field(j, "edges")) {
      ServicePair key(ServiceId(field(e, "u").get<std::string>()),
                      ServiceId(field(e, "v").get<std::string>()));
      EdgeData data{field(e, "raw").get<double>(), field(e, "weight").get<double>(),
                    breakdown_from(field(e, "breakdown"))};
      if (!edges.emplace(key, data).second) schema("duplicate edge in graph");
    }
    return AffinityGraph(std::move(vertices), std::move(edges));
  });
}

json to_json(const Partition& p, const AffinityGraph& g) {
  const auto cut = cut_summary(g, p);
  json subsets = json::array();
  for (const auto& s : p.subsets) subsets.push_back(name_list(s));
  return {{"k", p.k()},
          {"subsets", subsets},
          {"cut_weight", cut.cut_weight},
          {"internal_weight", cut.internal_weight}};
}

Partition partition_from_json(const json& j) {
  return guarded("partition", [&] {
    Partition p;
    for (const auto& s : field(j, "subsets")) p.subsets.push_back(id_list<ServiceId>(s));
    if (field(j, "k").get<std::size_t>() != p.k()) schema("k does not match subset count");
    p.canonicalize();
    return p;
  });
}

json to_json(const Placement& pl) {
  json assignment = json::object();
  for (const auto& [svc, node] : pl.assignment) assignment[svc.str()] = node.str();
  return {{"nodes", name_list(pl.nodes)}, {"assignment", assignment}};
}

Placement placement_from_json(const json& j) {
  auto pl = guarded("placement", [&] {
    Placement out;
    out.nodes = id_list<NodeId>(field(j, "nodes"));
    const auto& assignment = field(j, "assignment");
    if (!assignment.is_object()) schema("assignment must be an object");
    for (const auto& [svc, node] : assignment.items()) {
      out.assignment[ServiceId(svc)] = NodeId(node.get<std::string>());
    }
    return out;
  });
  try {
    pl.validate();
  } catch (const Error& e) {
    schema(e.what());
  }
  return pl;
}

json to_json(const MigrationPlan& plan) {
  json moves = json::array();
  for (const auto& m : plan.moves) {
    moves.push_back({{"service", m.service.str()}, {"from", m.from.str()}, {"to", m.to.str()}});
  }
  return {{"moves", moves}, {"unchanged_count", plan.unchanged_count}};
}

MigrationPlan plan_from_json(const json& j) {
  return guarded("plan", [&] {
    MigrationPlan plan;
    for (const auto& m : field(j, "moves")) {
      plan.moves.push_back({ServiceId(field(m, "service").get<std::string>()),
                            NodeId(field(m, "from").get<std::string>()),
                            NodeId(field(m, "to").get<std::string>())});
      if (plan.moves.back().from == plan.moves.back().to) schema("move with from == to");
    }
    plan.unchanged_count = field(j, "unchanged_count").get<std::size_t>();
    return plan;
  });
}

json to_json(const SimReport& r) {
  json pairs = json::array();
  for (const auto& p : r.per_pair) {
    pairs.push_back({{"u", p.pair.first().str()},
                     {"v", p.pair.second().str()},
                     {"bytes", p.bytes},
                     {"messages", p.messages},
                     {"local", p.local}});
  }
  return {{"inter_node_bytes", r.inter_node_bytes},
          {"intra_node_bytes", r.intra_node_bytes},
          {"cut_weight", r.cut_weight},
          {"est_mean_latency_ms", r.est_mean_latency_ms},
          {"per_pair", pairs}};
}

SimReport sim_report_from_json(const json& j) {
  return guarded("sim report", [&] {
    SimReport r;
    r.inter_node_bytes = field(j, "inter_node_bytes").get<std::uint64_t>();
    r.intra_node_bytes = field(j, "intra_node_bytes").get<std::uint64_t>();
    r.cut_weight = field(j, "cut_weight").get<double>();
    r.est_mean_latency_ms = field(j, "est_mean_latency_ms").get<double>();
    for (const auto& p : field(j, "per_pair")) {
      r.per_pair.push_back({ServicePair(ServiceId(field(p, "u").get<std::string>()),
                                        ServiceId(field(p, "v").get<std::string>())),
                            field(p, "bytes").get<std::uint64_t>(),
                            field(p, "messages").get<std::uint64_t>(),
                            field(p, "local").get<bool>()});
    }
    return r;
  });
}

json to_json(const ImprovementReport& r) {
  json out = json::object();
  json undefined = json::array();
  auto put = [&](const char* key, const std::optional<double>& v) {
    if (v) {
      out[key] = *v;
    } else {
      out[key] = nullptr;
      undefined.push_back(key);
    }
  };
  put("latency_delta_pct", r.latency_delta_pct);
  put("inter_bytes_delta_pct", r.inter_bytes_delta_pct);
  put("cut_delta_pct", r.cut_delta_pct);
  out["undefined"] = undefined;
  return out;
}

std::string to_dot(const AffinityGraph& g, const Partition* p) {
  std::ostringstream os;
  os << "graph affinity {\n  node [shape=box];\n";
  if (p) {
    for (std::size_t i = 0; i < p->subsets.size(); ++i) {
      os << "  subgraph cluster_" << i << " {\n    label=\"cluster " << i << "\";\n";
      for (const auto& v : p->subsets[i]) os << "    " << dot_quote(v.str()) << ";\n";
      os << "  }\n";
    }
  } else {
    for (const auto& v : g.vertices()) os << "  " << dot_quote(v.str()) << ";\n";
  }
  for (const auto& [pair, e] : g.edges()) {
    os << "  " << dot_quote(pair.first().str()) << " -- " << dot_quote(pair.second().str())
       << " [label=\"" << format_double(e.weight)
       << "\", penwidth=" << format_double(0.5 + 4.5 * e.weight) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string compare_csv(const SimReport& before, const SimReport& after) {
  std::ostringstream os;
  os << "label,est_mean_latency_ms,inter_node_bytes,intra_node_bytes,cut_weight\n";
  auto row = [&](const char* label, const SimReport& r) {
    os << label << ',' << format_double(r.est_mean_latency_ms) << ',' << r.inter_node_bytes
       << ',' << r.intra_node_bytes << ',' << format_double(r.cut_weight) << '\n';
  };
  row("before", before);
  row("after", after);
  return os.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileNotFound, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json read_json_file(const std::filesystem::path& path) {
  const auto text = read_text_file(path);
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) schema("invalid JSON in " + path.string());
  return j;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::FileNotFound, "cannot write " + path.string());
  out << text;
}

}  // namespace saga::io
