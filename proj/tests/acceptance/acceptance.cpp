// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails or exceeds its time budget.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "saga/affinity.hpp"
#include "saga/bench.hpp"
#include "saga/cli.hpp"
#include "saga/graph.hpp"
#include "saga/io.hpp"
#include "saga/oracle.hpp"
#include "saga/partition.hpp"
#include "saga/placement.hpp"

using namespace saga;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string fmt(double v, int precision = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << v;
  return os.str();
}

int cli(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "saga");
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  if (out) *out = o.str();
  if (code != 0) std::cerr << "  saga failed: " << e.str();
  return code;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

// 1. Exact ratios and tag truth tables.
Outcome affinity_formulas() {
  Outcome r;
  const ServiceId a("a"), b("b"), c("c"), d("d");
  std::vector<MessageRecord> records{{a, b, 250, 3, 0}, {c, d, 600, 5, 1}, {b, c, 150, 4, 2}};
  auto win = aggregate(records, 0, 10);
  auto near = [](double x, double y) { return std::fabs(x - y) <= 1e-12; };
  r.require(near(data_affinity(a, b, win), 250.0 / 1000.0), "d(a,b)");
  r.require(near(data_affinity(c, d, win), 600.0 / 1000.0), "d(c,d)");
  r.require(near(data_affinity(b, c, win), 150.0 / 1000.0), "d(b,c)");
  r.require(near(data_affinity(a, d, win), 0.0), "d(a,d) absent");
  r.require(near(coupling_affinity(a, b, win), 3.0 / 12.0), "c(a,b)");
  r.require(near(coupling_affinity(d, c, win), 5.0 / 12.0), "c(d,c)");
  r.require(near(coupling_affinity(b, c, win), 4.0 / 12.0), "c(b,c)");
  r.require(near(coupling_affinity(a, c, win), 0.0), "c(a,c) absent");
  auto idle = aggregate({}, 0, 10, {a, b});
  r.require(data_affinity(a, b, idle) == 0.0 && coupling_affinity(a, b, idle) == 0.0,
            "idle window");

  // Truth table over {absent, "x", "y"} for each tag kind.
  const std::optional<std::string> vals[] = {std::nullopt, "x", "y"};
  for (const auto& u : vals) {
    for (const auto& v : vals) {
      const double expected = (u && v && *u == *v) ? 1.0 : 0.0;
      ServiceMeta mu{a, u, u, u}, mv{b, v, v, v};
      r.require(privacy_affinity(mu, mv) == expected, "privacy truth table");
      r.require(functional_affinity(mu, mv) == expected, "functional truth table");
      r.require(operational_affinity(mu, mv) == expected, "operational truth table");
    }
  }
  if (r.ok) r.detail = "ratios exact to 1e-12; 9-row tag truth table x3";
  return r;
}

// 2. Min-max normalization on random graphs plus the degenerate case.
Outcome normalization() {
  Outcome r;
  std::mt19937_64 rng(2002);
  std::uniform_int_distribution<std::size_t> size(3, 30);
  int checked_extremes = 0;
  for (int i = 0; i < 100; ++i) {
    auto g = saga::testing::random_graph(rng, size(rng), 0.4);
    std::set<double> raws;
    double lo = 2.0, hi = -1.0;
    for (const auto& [_, e] : g.edges()) {
      r.require(e.weight >= 0.0 && e.weight <= 1.0, "weight outside [0,1]");
      raws.insert(e.raw_affinity);
      lo = std::min(lo, e.weight);
      hi = std::max(hi, e.weight);
    }
    if (raws.size() >= 2) {
      ++checked_extremes;
      r.require(lo == 0.0 && hi == 1.0, "min/max not exactly 0/1");
    } else if (raws.size() == 1) {
      r.require(lo == 1.0 && hi == 1.0, "single raw value not mapped to 1");
    }
  }
  // Ring with identical traffic and no tags: every raw affinity is equal.
  std::vector<MessageRecord> ring;
  for (int i = 0; i < 6; ++i) {
    ring.push_back({ServiceId(saga::testing::svc_name(i)),
                    ServiceId(saga::testing::svc_name((i + 1) % 6)), 100, 2, i});
  }
  auto g = build_graph(aggregate(ring, 0, 10), {}, AffinityWeights{});
  for (const auto& [_, e] : g.edges()) r.require(e.weight == 1.0, "degenerate weight != 1");
  r.require(g.edge_count() == 6, "ring edges");
  if (r.ok) r.detail = std::to_string(checked_extremes) + " graphs with exact 0/1 extremes";
  return r;
}

// 3. KL against the exhaustive oracle.
Outcome oracle_equivalence() {
  Outcome r;
  std::mt19937_64 rng(3003);
  int equal = 0, total = 0;
  for (std::size_t n : {4u, 6u, 8u, 10u}) {
    for (int i = 0; i < 50; ++i) {
      auto g = saga::testing::random_graph(rng, n, 0.6);
      const double kl = kl_bisect(g, g.vertices()).cut;
      const double best =
          total_cut_weight(g, oracle_min_kcut(g, 2, Balance::Algorithm1Sizes));
      r.require(kl >= best - 1e-12, "KL cut below oracle cut (n=" + std::to_string(n) + ")");
      if (std::fabs(kl - best) <= 1e-9) ++equal;
      ++total;
    }
  }
  const double eq_rate = static_cast<double>(equal) / total;
  r.require(eq_rate >= 0.90, "k=2 equality rate " + fmt(eq_rate) + " < 0.90");

  int within = 0, total3 = 0;
  for (std::size_t n : {6u, 9u}) {
    for (int i = 0; i < 50; ++i) {
      auto g = saga::testing::random_graph(rng, n, 0.6);
      const double kl = total_cut_weight(g, partition_k(g, 3));
      const double best =
          total_cut_weight(g, oracle_min_kcut(g, 3, Balance::Algorithm1Sizes));
      r.require(kl >= best - 1e-12, "k=3 partition below constrained oracle");
      if (kl <= 1.25 * best + 1e-12) ++within;
      ++total3;
    }
  }
  const double within_rate = static_cast<double>(within) / total3;
  r.require(within_rate >= 0.90, "k=3 within-1.25x rate " + fmt(within_rate) + " < 0.90");
  r.detail += (r.detail.empty() ? "" : "; ") + std::string("k=2 equal on ") +
              std::to_string(equal) + "/" + std::to_string(total) + ", k=3 within 1.25x on " +
              std::to_string(within) + "/" + std::to_string(total3);
  return r;
}

// 4. Pass-level invariants of the KL procedure.
Outcome kl_invariants() {
  Outcome r;
  std::mt19937_64 rng(4004);
  std::uniform_int_distribution<std::size_t> size(4, 16);
  std::size_t passes = 0, d_checks = 0, gain_checks = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = size(rng);
    auto g = saga::testing::random_graph(rng, n, 0.5);

    // (a) every accepted pass lowers the cut by exactly g_max.
    BisectTrace trace;
    kl_bisect(g, g.vertices(), {}, &trace);
    for (const auto& pass : trace.passes) {
      ++passes;
      std::set<ServiceId> before(pass.a_before.begin(), pass.a_before.end());
      std::set<ServiceId> after(pass.a_after.begin(), pass.a_after.end());
      const double delta = saga::testing::reference_cut(g, g.vertices(), before) -
                           saga::testing::reference_cut(g, g.vertices(), after);
      if (pass.accepted) {
        r.require(pass.g_max > 0.0, "accepted pass with g_max <= 0");
        r.require(std::fabs(delta - pass.g_max) <= 1e-9, "cut decrease != g_max");
      } else {
        r.require(before == after, "rejected pass changed the bisection");
      }
    }

    // (b) incremental D and (c) gain formula, stepping one pass by hand.
    DenseWeights c(g, all_indices(n));
    std::vector<Side> sides(n, Side::B);
    std::vector<std::size_t> order = all_indices(n);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t j = 0; j < (n + 1) / 2; ++j) sides[order[j]] = Side::A;
    KlPass pass(c, sides);
    auto virt = sides;
    while (pass.steps_remaining() > 0) {
      const double base = bisection_cut(c, virt);
      for (auto a : pass.free_a()) {
        for (auto b : pass.free_b()) {
          auto swapped = virt;
          std::swap(swapped[a], swapped[b]);
          const double gain = pass.state().d[a] + pass.state().d[b] - 2.0 * c(a, b);
          ++gain_checks;
          r.require(std::fabs((base - bisection_cut(c, swapped)) - gain) <= 1e-9,
                    "gain formula != cut delta");
        }
      }
      auto s = pass.step();
      std::swap(virt[s.a], virt[s.b]);
      for (std::size_t x = 0; x < n; ++x) {
        if (pass.state().locked[x]) continue;
        ++d_checks;
        r.require(std::fabs(pass.state().d[x] - KlPass::d_value(c, virt, x)) <= 1e-9,
                  "incremental D != recomputed D");
      }
    }

    // (d) k-1 bisections.
    for (int k = 1; k <= static_cast<int>(n); k += 3) {
      PartitionStats stats;
      partition_k(g, k, {}, &stats);
      r.require(stats.bisections == k - 1, "bisection count != k-1");
    }
  }
  if (r.ok) {
    r.detail = std::to_string(passes) + " passes, " + std::to_string(d_checks) + " D checks, " +
               std::to_string(gain_checks) + " gain checks";
  }
  return r;
}

// 5. Runtime scaling through the bench command.
Outcome runtime_scaling() {
  Outcome r;
  std::string csv;
  if (cli({"bench", "--n", "50,100,200", "--k-list", "2,4,8", "--repeats", "3"}, &csv) != 0) {
    r.require(false, "bench command failed");
    return r;
  }
  std::map<std::pair<std::size_t, int>, double> ms;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream f(line);
    std::string n, k, t;
    std::getline(f, n, ',');
    std::getline(f, k, ',');
    std::getline(f, t, ',');
    ms[{std::stoul(n), std::stoi(k)}] = std::stod(t);
  }
  r.require(ms.size() == 9, "grid incomplete");
  std::ostringstream detail;
  for (int k : {2, 4, 8}) {
    const double t50 = ms[{50, k}], t100 = ms[{100, k}], t200 = ms[{200, k}];
    r.require(t50 > 0.0 && t50 < t100 && t100 < t200,
              "runtime not increasing in n at k=" + std::to_string(k));
    r.require(t200 / t100 > 2.0, "n=200/n=100 ratio <= 2 at k=" + std::to_string(k));
    detail << "k=" << k << " ratio " << fmt(t200 / t100, 2) << " ";
  }
  if (r.ok) r.detail = detail.str();
  return r;
}

struct PipelineFiles {
  fs::path dir;
  fs::path path(const char* name) const { return dir / name; }
};

bool run_pipeline(const PipelineFiles& f, const std::string& demo) {
  const std::string cfg = demo + "/config.json";
  auto p = [&](const char* n) { return f.path(n).string(); };
  return cli({"--config", cfg, "-o", p("window.json"), "ingest", "--trace",
              demo + "/trace.jsonl", "--meta", demo + "/meta.json"}) == 0 &&
         cli({"--config", cfg, "-o", p("graph.json"), "graph", "--window", p("window.json"),
              "--meta", demo + "/meta.json", "--dot", p("graph.dot")}) == 0 &&
         cli({"--config", cfg, "-o", p("partition.json"), "partition", "--graph",
              p("graph.json")}) == 0 &&
         cli({"--config", cfg, "-o", p("plan.json"), "plan", "--partition", p("partition.json"),
              "--current", demo + "/current_placement.json", "--placement-out",
              p("target.json")}) == 0 &&
         cli({"--config", cfg, "-o", p("before.json"), "simulate", "--placement",
              demo + "/current_placement.json", "--window", p("window.json"), "--graph",
              p("graph.json")}) == 0 &&
         cli({"--config", cfg, "-o", p("after.json"), "simulate", "--placement",
              p("target.json"), "--window", p("window.json"), "--graph", p("graph.json")}) == 0 &&
         cli({"--config", cfg, "-o", p("improvement.json"), "simulate", "--compare",
              p("before.json"), p("after.json")}) == 0 &&
         cli({"--config", cfg, "--format", "csv", "-o", p("improvement.csv"), "simulate",
              "--compare", p("before.json"), p("after.json")}) == 0;
}

// 6. Demo dataset end to end against a round-robin baseline.
Outcome end_to_end_demo() {
  Outcome r;
  const std::string demo = SAGA_DEMO_DIR;
  PipelineFiles f{saga::testing::scratch_dir("acceptance_demo")};
  if (!run_pipeline(f, demo)) {
    r.require(false, "pipeline failed");
    return r;
  }
  auto win = io::window_from_json(io::read_json_file(f.path("window.json")));
  auto current = io::placement_from_json(io::read_json_file(demo + "/current_placement.json"));
  r.require(win.services.size() >= 12, "demo has fewer than 12 services");
  r.require(current.nodes.size() == 3, "demo does not use 3 nodes");
  std::vector<ServiceId> services(win.services.begin(), win.services.end());
  r.require(current == round_robin_placement(services, current.nodes),
            "bundled current placement is not round-robin");

  auto rep = io::read_json_file(f.path("improvement.json"));
  const double lat = rep["latency_delta_pct"].is_number() ? rep["latency_delta_pct"].get<double>()
                                                          : -1.0;
  const double bytes = rep["inter_bytes_delta_pct"].is_number()
                           ? rep["inter_bytes_delta_pct"].get<double>()
                           : -1.0;
  r.require(lat > 0.0, "latency_delta_pct <= 0");
  r.require(bytes > 0.0, "inter_bytes_delta_pct <= 0");

  SimReport before, after;
  before.est_mean_latency_ms = 31.80;
  after.est_mean_latency_ms = 24.36;
  const auto published = compare(before, after).latency_delta_pct.value_or(0.0);
  r.require(std::fabs(published - 23.40) <= 0.01, "31.80 -> 24.36 gives " + fmt(published));
  if (r.ok) {
    r.detail = "latency -" + fmt(lat, 2) + "%, inter-node bytes -" + fmt(bytes, 2) +
               "%; 31.80->24.36 = " + fmt(published, 4) + "%";
  }
  return r;
}

// 7. Byte-identical outputs across two runs.
Outcome determinism() {
  Outcome r;
  const std::string demo = SAGA_DEMO_DIR;
  PipelineFiles one{saga::testing::scratch_dir("acceptance_det1")};
  PipelineFiles two{saga::testing::scratch_dir("acceptance_det2")};
  if (!run_pipeline(one, demo) || !run_pipeline(two, demo)) {
    r.require(false, "pipeline failed");
    return r;
  }
  // Outputs carry no timestamp field, so whole files must match.
  int files = 0;
  for (const auto& entry : fs::directory_iterator(one.dir)) {
    const auto name = entry.path().filename();
    r.require(io::read_text_file(entry.path()) == io::read_text_file(two.dir / name),
              "differs: " + name.string());
    ++files;
  }
  r.require(files == 10, "expected 10 artifacts, got " + std::to_string(files));
  if (r.ok) r.detail = std::to_string(files) + " artifacts byte-identical";
  return r;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "affinity formulas", 1.0, affinity_formulas},
      {2, "normalization", 5.0, normalization},
      {3, "oracle equivalence", 60.0, oracle_equivalence},
      {4, "KL internal invariants", 30.0, kl_invariants},
      {5, "runtime scaling bench", 300.0, runtime_scaling},
      {6, "end-to-end demo", 30.0, end_to_end_demo},
      {7, "determinism", 10.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.budget_s) {
      o.ok = false;
      o.detail = "exceeded " + fmt(c.budget_s, 0) + "s budget";
    }
    failed += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << " ("
              << fmt(secs, 2) << "s): " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
