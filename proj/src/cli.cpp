#include "saga/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "saga/bench.hpp"
#include "saga/config.hpp"
#include "saga/error.hpp"
#include "saga/graph.hpp"
#include "saga/ingest.hpp"
#include "saga/io.hpp"
#include "saga/partition.hpp"
#include "saga/placement.hpp"

namespace saga::cli {

namespace {

using nlohmann::json;

// Command-line values that override the config file.
struct Overrides {
  std::string config_path;
  std::string output_path;
  std::string format;
  int k = 0;
  std::int64_t window_start = 0;
  std::int64_t window_end = 0;
  std::vector<std::string> nodes;
  std::uint64_t seed = 0;
  int restarts = 1;
  int threads = 0;
  std::string scan;
  std::string trace_format;
  bool lenient = false;
  double local_ms = 0.0;
  double remote_ms = 0.0;
  double w_data = 0.0, w_privacy = 0.0, w_coupling = 0.0, w_functional = 0.0,
         w_operational = 0.0;
};

struct Options {
  CLI::Option* k = nullptr;
  CLI::Option* window_start = nullptr;
  CLI::Option* window_end = nullptr;
  CLI::Option* nodes = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* restarts = nullptr;
  CLI::Option* threads = nullptr;
  CLI::Option* scan = nullptr;
  CLI::Option* trace_format = nullptr;
  CLI::Option* lenient = nullptr;
  CLI::Option* local_ms = nullptr;
  CLI::Option* remote_ms = nullptr;
  CLI::Option* w_data = nullptr;
  CLI::Option* w_privacy = nullptr;
  CLI::Option* w_coupling = nullptr;
  CLI::Option* w_functional = nullptr;
  CLI::Option* w_operational = nullptr;
};

Config load_config(const Overrides& o, const Options& opt) {
  std::string path = o.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("SAGA_CONFIG"); env && *env) path = env;
  }
  json j = json::object();
  if (!path.empty()) j = io::read_json_file(path);
  Config c = config_from_json(j);

  if (opt.k->count()) c.k = o.k;
  if (opt.window_start->count()) c.window_start = o.window_start;
  if (opt.window_end->count()) c.window_end = o.window_end;
  if (opt.nodes->count()) {
    c.nodes.clear();
    for (const auto& n : o.nodes) c.nodes.emplace_back(n);
  }
  if (opt.seed->count()) c.seed = o.seed;
  if (opt.restarts->count()) c.restarts = o.restarts;
  if (opt.threads->count()) c.threads = o.threads;
  if (opt.scan->count()) c.scan = o.scan == "serial" ? ScanMode::Serial : ScanMode::Parallel;
  if (opt.trace_format->count()) {
    c.trace_format = o.trace_format == "csv" ? TraceFormat::Csv : TraceFormat::Jsonl;
  }
  if (opt.lenient->count()) c.lenient = o.lenient;
  if (opt.local_ms->count()) c.latency.local_ms = o.local_ms;
  if (opt.remote_ms->count()) c.latency.remote_ms = o.remote_ms;
  if (opt.w_data->count()) c.weights.data = o.w_data;
  if (opt.w_privacy->count()) c.weights.privacy = o.w_privacy;
  if (opt.w_coupling->count()) c.weights.coupling = o.w_coupling;
  if (opt.w_functional->count()) c.weights.functional = o.w_functional;
  if (opt.w_operational->count()) c.weights.operational = o.w_operational;
  c.validate();
  set_scan_threads(c.threads);
  return c;
}

KlOptions kl_options(const Config& c) {
  KlOptions kl;
  kl.scan = c.scan;
  kl.seed = c.seed;
  kl.restarts = c.restarts;
  return kl;
}

int require_k(const Config& c) {
  if (!c.k) throw Error(ErrorCode::InvalidConfig, "k is required (config or --k)");
  return *c.k;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidConfig, std::string("bad ") + what + " list: " + text);
    }
  }
  if (out.empty()) throw Error(ErrorCode::InvalidConfig, std::string("empty ") + what + " list");
  return out;
}

void report_error(std::ostream& err, ErrorCode code, const std::string& message) {
  json j = {{"error", std::string(to_string(code))},
            {"message", message},
            {"exit_code", exit_code(code)}};
  err << j.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Service-affinity graph partitioning and placement planning", "saga"};
  app.require_subcommand(1);
  Overrides o;
  Options opt;

  app.add_option("--config", o.config_path, "JSON config file (fallback: $SAGA_CONFIG)");
  app.add_option("--output,-o", o.output_path, "Write the result here instead of stdout");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "dot"}));
  opt.k = app.add_option("--k", o.k, "Number of clusters / nodes");
  opt.window_start = app.add_option("--window-start", o.window_start, "Window start (ms)");
  opt.window_end = app.add_option("--window-end", o.window_end, "Window end (ms, exclusive)");
  opt.nodes = app.add_option("--nodes", o.nodes, "Node names")->delimiter(',');
  opt.seed = app.add_option("--seed", o.seed, "Random-restart seed");
  opt.restarts = app.add_option("--restarts", o.restarts, "Random restarts per bisection");
  opt.threads = app.add_option("--threads", o.threads, "OpenMP threads for the gain scan");
  opt.scan = app.add_option("--scan", o.scan, "Gain scan kernel")
                 ->check(CLI::IsMember({"serial", "parallel"}));
  opt.trace_format = app.add_option("--trace-format", o.trace_format, "Trace file format")
                         ->check(CLI::IsMember({"jsonl", "csv"}));
  opt.lenient = app.add_flag("--lenient", o.lenient, "Skip malformed trace lines");
  opt.local_ms = app.add_option("--local-ms", o.local_ms, "Latency of a local message");
  opt.remote_ms = app.add_option("--remote-ms", o.remote_ms, "Latency of a remote message");
  opt.w_data = app.add_option("--w-data", o.w_data, "Data affinity weight");
  opt.w_privacy = app.add_option("--w-privacy", o.w_privacy, "Privacy affinity weight");
  opt.w_coupling = app.add_option("--w-coupling", o.w_coupling, "Coupling affinity weight");
  opt.w_functional = app.add_option("--w-functional", o.w_functional, "Functional affinity weight");
  opt.w_operational =
      app.add_option("--w-operational", o.w_operational, "Operational affinity weight");

  std::string trace_path, meta_path, window_path, graph_path, partition_path, current_path,
      placement_out, placement_path, dot_path;
  std::vector<std::string> compare_paths;
  std::string n_list = "100,200,300,400,500", k_list = "10,20,30,40,50";
  int repeats = 3;
  double edge_prob = 0.1;
  std::uint64_t bench_seed = 1;

  auto* ingest = app.add_subcommand("ingest", "Aggregate a message trace into a metrics window");
  ingest->add_option("--trace", trace_path, "Trace file (JSONL or CSV)")->required();
  ingest->add_option("--meta", meta_path, "Service metadata JSON");

  auto* graph = app.add_subcommand("graph", "Build the affinity graph from a metrics window");
  graph->add_option("--window", window_path, "Metrics window JSON")->required();
  graph->add_option("--meta", meta_path, "Service metadata JSON");
  graph->add_option("--dot", dot_path, "Also write Graphviz DOT here");

  auto* partition = app.add_subcommand("partition", "Partition the graph into k clusters");
  partition->add_option("--graph", graph_path, "Affinity graph JSON")->required();

  auto* plan = app.add_subcommand("plan", "Plan migration from a current placement");
  plan->add_option("--partition", partition_path, "Partition JSON")->required();
  plan->add_option("--current", current_path, "Current placement JSON")->required();
  plan->add_option("--placement-out", placement_out, "Write the target placement here");

  auto* simulate_cmd = app.add_subcommand("simulate", "Simulate a placement or compare reports");
  simulate_cmd->add_option("--placement", placement_path, "Placement JSON");
  simulate_cmd->add_option("--window", window_path, "Metrics window JSON");
  simulate_cmd->add_option("--graph", graph_path, "Affinity graph JSON");
  simulate_cmd->add_option("--compare", compare_paths, "BEFORE AFTER simulation reports")
      ->expected(2);

  auto* bench = app.add_subcommand("bench", "Time partition_k on random graphs");
  bench->add_option("--n", n_list, "Comma-separated vertex counts");
  bench->add_option("--k-list", k_list, "Comma-separated cluster counts");
  bench->add_option("--repeats", repeats, "Repeats per cell (median reported)");
  bench->add_option("--edge-prob", edge_prob, "Edge probability");
  bench->add_option("--bench-seed", bench_seed, "Graph generator seed");

  std::vector<char*> argv;
  std::vector<std::string> storage(args);
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    json j = {{"error", "Usage"}, {"message", e.what()}, {"exit_code", 2}};
    err << j.dump() << '\n';
    return 2;
  }

  auto emit = [&](const std::string& text) {
    if (o.output_path.empty()) {
      out << text;
    } else {
      io::write_text_file(o.output_path, text);
    }
  };

  try {
    const Config cfg = load_config(o, opt);

    if (*ingest) {
      std::ifstream trace(trace_path, std::ios::binary);
      if (!trace) throw Error(ErrorCode::FileNotFound, "cannot open " + trace_path);
      auto parsed = parse_trace(trace, cfg.trace_format, {cfg.lenient});
      std::set<ServiceId> declared;
      if (!meta_path.empty()) {
        std::istringstream meta(io::read_text_file(meta_path));
        for (const auto& [id, _] : parse_meta(meta)) declared.insert(id);
      }
      Timestamp lo = 0, hi = 1;
      if (!parsed.records.empty()) {
        auto [mn, mx] = std::minmax_element(
            parsed.records.begin(), parsed.records.end(),
            [](const auto& a, const auto& b) { return a.timestamp < b.timestamp; });
        lo = mn->timestamp;
        hi = mx->timestamp + 1;
      }
      const Timestamp start = cfg.window_start.value_or(lo);
      const Timestamp end = cfg.window_end.value_or(std::max(hi, start + 1));
      auto win = aggregate(parsed.records, start, end, declared);
      json j = io::to_json(win);
      if (cfg.lenient) j["skipped_lines"] = parsed.skipped_lines;
      emit(io::dump(j));
    } else if (*graph) {
      auto win = io::window_from_json(io::read_json_file(window_path));
      MetaMap meta;
      if (!meta_path.empty()) {
        std::istringstream in(io::read_text_file(meta_path));
        meta = parse_meta(in);
      }
      auto g = build_graph(win, meta, cfg.weights);
      if (!dot_path.empty()) io::write_text_file(dot_path, io::to_dot(g));
      emit(o.format == "dot" ? io::to_dot(g) : io::dump(io::to_json(g)));
    } else if (*partition) {
      auto g = io::graph_from_json(io::read_json_file(graph_path));
      auto p = partition_k(g, require_k(cfg), kl_options(cfg));
      emit(o.format == "dot" ? io::to_dot(g, &p) : io::dump(io::to_json(p, g)));
    } else if (*plan) {
      auto p = io::partition_from_json(io::read_json_file(partition_path));
      auto current = io::placement_from_json(io::read_json_file(current_path));
      if (cfg.nodes.empty()) throw Error(ErrorCode::InvalidConfig, "nodes are required for plan");
      auto target = assign_clusters(p, cfg.nodes);
      auto mp = plan_migration(current, target);
      if (!placement_out.empty()) io::write_text_file(placement_out, io::dump(io::to_json(target)));
      emit(io::dump(io::to_json(mp)));
    } else if (*simulate_cmd) {
      if (!compare_paths.empty()) {
        auto before = io::sim_report_from_json(io::read_json_file(compare_paths[0]));
        auto after = io::sim_report_from_json(io::read_json_file(compare_paths[1]));
        emit(o.format == "csv" ? io::compare_csv(before, after)
                               : io::dump(io::to_json(compare(before, after))));
      } else {
        if (placement_path.empty() || window_path.empty() || graph_path.empty()) {
          throw Error(ErrorCode::InvalidConfig,
                      "simulate needs --placement, --window and --graph (or --compare)");
        }
        auto pl = io::placement_from_json(io::read_json_file(placement_path));
        auto win = io::window_from_json(io::read_json_file(window_path));
        auto g = io::graph_from_json(io::read_json_file(graph_path));
        emit(io::dump(io::to_json(simulate(pl, win, g, cfg.latency))));
      }
    } else if (*bench) {
      BenchSpec spec;
      spec.n_values = parse_list<std::size_t>(n_list, "n");
      spec.k_values = parse_list<int>(k_list, "k");
      spec.repeats = repeats;
      spec.edge_probability = edge_prob;
      spec.seed = bench_seed;
      spec.kl = kl_options(cfg);
      emit(bench_csv(run_bench(spec)));
    }
  } catch (const Error& e) {
    report_error(err, e.code(), e.what());
    return exit_code(e.code());
  } catch (const std::exception& e) {
    json j = {{"error", "Internal"}, {"message", e.what()}, {"exit_code", 1}};
    err << j.dump() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace saga::cli
