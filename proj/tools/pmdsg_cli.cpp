// Command-line surface: peeling, iterated peeling, Frank-Wolfe, the exact
// oracle, hardness-gadget generation, inequality scans, and a small benchmark
// harness. Results are emitted as JSON run records or CSV tables.
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pmdsg/constructions.hpp"
#include "pmdsg/density.hpp"
#include "pmdsg/frank_wolfe.hpp"
#include "pmdsg/graph.hpp"
#include "pmdsg/iterate.hpp"
#include "pmdsg/oracle.hpp"
#include "pmdsg/peeling.hpp"

using json = nlohmann::ordered_json;
using namespace pmdsg;

namespace {

Graph load_graph(const std::string& path, bool weighted) {
  return Graph::load_edge_list_file(path, weighted);
}

long long to_ms(double seconds) { return std::llround(seconds * 1000.0); }

std::vector<long long> sorted_labels(const Graph& g, const VertexSet& s) {
  std::vector<long long> out;
  out.reserve(s.size());
  for (int v : s.members()) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

// Shared record shape; field order is part of the output contract.
json base_record(const std::string& algorithm, double p, std::optional<double> eps,
                 std::optional<int> iters, const std::string& graph, double best_density,
                 int best_set_size, long long wall_ms) {
  json rec;
  rec["algorithm"] = algorithm;
  rec["p"] = p;
  if (eps) rec["eps"] = *eps;
  if (iters) rec["iters"] = *iters;
  rec["graph"] = graph;
  rec["best_density"] = best_density;
  rec["best_set_size"] = best_set_size;
  rec["wall_ms"] = wall_ms;
  return rec;
}

json trajectory_json(const std::vector<double>& best, const std::vector<double>& cum_seconds) {
  json traj = json::array();
  for (std::size_t i = 0; i < best.size(); ++i)
    traj.push_back({i + 1, best[i], to_ms(cum_seconds[i])});
  return traj;
}

std::string trajectory_csv(const std::vector<double>& best,
                           const std::vector<double>& cum_seconds) {
  std::ostringstream out;
  out << "iteration,best_density,cumulative_seconds\n";
  out.precision(12);
  for (std::size_t i = 0; i < best.size(); ++i)
    out << (i + 1) << ',' << best[i] << ',' << cum_seconds[i] << '\n';
  return out.str();
}

struct PeelArgs {
  std::string algo, input, output;
  double p = 0.0, eps = 0.5;
  bool eps_given = false, weighted = false, emit_set = false;
};

int run_peel(const PeelArgs& a) {
  Graph g = load_graph(a.input, a.weighted);
  PeelResult r;
  std::optional<double> eps;
  auto t0 = std::chrono::steady_clock::now();
  if (a.algo == "greedy-p") {
    r = greedy_p(g, a.p);
  } else if (a.algo == "lazy") {
    eps = a.eps;
    r = lazy_greedy_p(g, a.p, a.eps);
  } else if (a.algo == "simple") {
    r = simple_greedy_p(g, a.p);
  } else {
    throw std::invalid_argument("unknown peel algorithm: " + a.algo);
  }
  long long ms = to_ms(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());

  json rec = base_record(a.algo, a.p, eps, std::nullopt, a.input, r.best_density.value,
                         static_cast<int>(r.best_set.size()), ms);
  if (a.emit_set) rec["set"] = sorted_labels(g, r.best_set);
  write_text(a.output, rec.dump(2) + "\n");
  return 0;
}

struct IterateArgs {
  std::string algo, input, output, traj;
  std::vector<double> ps;
  double p = 1.0, eps = 0.5;
  int iters = 100;
  bool weighted = false, emit_set = false;
};

int run_iterate(const IterateArgs& a) {
  Graph g = load_graph(a.input, a.weighted);
  json out_doc;
  std::string traj_csv;

  if (a.algo == "greedypp" || a.algo == "lazygreedypp") {
    bool lazy = a.algo == "lazygreedypp";
    auto t0 = std::chrono::steady_clock::now();
    IterState st = greedy_pp(g, a.p, a.iters, lazy ? InnerMode::lazy_eps(a.eps) : InnerMode::exact());
    long long ms =
        to_ms(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    json rec = base_record(a.algo, a.p, lazy ? std::optional<double>(a.eps) : std::nullopt,
                           a.iters, a.input, st.best.best_density.value,
                           static_cast<int>(st.best.best_set.size()), ms);
    rec["trajectory"] = trajectory_json(st.trajectory, st.cumulative_seconds);
    if (a.emit_set) rec["set"] = sorted_labels(g, st.best.best_set);
    out_doc = std::move(rec);
    traj_csv = trajectory_csv(st.trajectory, st.cumulative_seconds);
  } else if (a.algo == "simplepp") {
    if (a.ps.empty()) throw std::invalid_argument("simplepp needs --ps");
    auto t0 = std::chrono::steady_clock::now();
    SimplePPResult res = simple_pp(g, a.iters, a.ps);
    long long ms =
        to_ms(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    json recs = json::array();
    for (std::size_t j = 0; j < res.ps.size(); ++j) {
      const IterState& st = res.per_p[j];
      json rec = base_record(a.algo, res.ps[j], std::nullopt, a.iters, a.input,
                             st.best.best_density.value,
                             static_cast<int>(st.best.best_set.size()), ms);
      rec["trajectory"] = trajectory_json(st.trajectory, st.cumulative_seconds);
      if (a.emit_set) rec["set"] = sorted_labels(g, st.best.best_set);
      recs.push_back(std::move(rec));
    }
    out_doc = res.ps.size() == 1 ? std::move(recs[0]) : std::move(recs);
    const IterState& st0 = res.per_p[0];
    traj_csv = trajectory_csv(st0.trajectory, st0.cumulative_seconds);
  } else {
    throw std::invalid_argument("unknown iterate algorithm: " + a.algo);
  }

  write_text(a.output, out_doc.dump(2) + "\n");
  if (!a.traj.empty()) write_text(a.traj, traj_csv);
  return 0;
}

struct FwArgs {
  std::string input, output, traj;
  double p = 1.0;
  int iters = 500;
  bool weighted = false, emit_set = false;
};

int run_fw(const FwArgs& a) {
  Graph g = load_graph(a.input, a.weighted);
  std::vector<double> best, cum;
  auto t0 = std::chrono::steady_clock::now();
  double best_so_far = -1.0;
  FWObserver observer = [&](int, const std::vector<double>& b) {
    PeelResult r = round_fractional(g, a.p, b);
    best_so_far = std::max(best_so_far, r.best_density.value);
    best.push_back(best_so_far);
    cum.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  };
  FWState st = frank_wolfe(g, a.p, a.iters, observer);
  long long ms = to_ms(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());

  json rec = base_record("fw", a.p, std::nullopt, a.iters, a.input, st.rounded.best_density.value,
                         static_cast<int>(st.rounded.best_set.size()), ms);
  rec["trajectory"] = trajectory_json(best, cum);
  if (a.emit_set) rec["set"] = sorted_labels(g, st.rounded.best_set);
  write_text(a.output, rec.dump(2) + "\n");
  if (!a.traj.empty()) write_text(a.traj, trajectory_csv(best, cum));
  return 0;
}

struct OracleArgs {
  std::string input, output;
  double p = 1.0;
  int limit = 22;
  bool weighted = false, emit_set = false;
};

int run_oracle(const OracleArgs& a) {
  Graph g = load_graph(a.input, a.weighted);
  auto t0 = std::chrono::steady_clock::now();
  OracleResult r = brute_force_opt(g, a.p, a.limit);
  long long ms = to_ms(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  json rec = base_record("oracle", a.p, std::nullopt, std::nullopt, a.input, r.best_density.value,
                         static_cast<int>(r.best_set.size()), ms);
  if (a.emit_set) rec["set"] = sorted_labels(g, r.best_set);
  write_text(a.output, rec.dump(2) + "\n");
  return 0;
}

struct GadgetArgs {
  std::string x3c, out_graph, out_meta;
  double p = 0.5;
  bool weighted = false, decide = false;
  int limit = 22;
};

int run_gadget(const GadgetArgs& a) {
  X3CInstance inst = load_x3c_file(a.x3c);
  GadgetSpec spec = x3c_gadget(inst, a.p, a.weighted);
  std::ostringstream graph_text;
  spec.graph.write_edge_list(graph_text);
  write_text(a.out_graph, graph_text.str());

  json meta;
  meta["x3c"] = a.x3c;
  meta["p"] = a.p;
  meta["regime"] = regime_name(spec.regime);
  meta["d"] = spec.d;
  meta["rho_star"] = spec.rho_star;
  meta["elements"] = spec.element_count;
  meta["sets"] = spec.set_count;
  meta["decide_geq"] = spec.decide_geq;
  if (a.decide) meta["decide"] = x3c_decide(inst, a.p, a.weighted, a.limit);
  write_text(a.out_meta, meta.dump(2) + "\n");
  return 0;
}

struct ScanArgs {
  std::string regime, output;
  double pmin = 0.0, pmax = 0.0;
  int points = 50;
};

GadgetRegime parse_regime(const std::string& name) {
  if (name == "weighted-pos") return GadgetRegime::WeightedPos;
  if (name == "weighted-neg") return GadgetRegime::WeightedNeg;
  if (name == "unweighted-pos") return GadgetRegime::UnweightedPos;
  if (name == "unweighted-neg") return GadgetRegime::UnweightedNeg;
  throw std::invalid_argument("unknown regime: " + name);
}

// Interior defaults for each regime's open p-interval.
void regime_default_range(GadgetRegime r, double& lo, double& hi) {
  switch (r) {
    case GadgetRegime::WeightedPos: lo = 0.02; hi = 0.98; break;
    case GadgetRegime::WeightedNeg: lo = -2.94; hi = -0.06; break;
    case GadgetRegime::UnweightedPos: lo = 0.005; hi = 0.245; break;
    case GadgetRegime::UnweightedNeg: lo = -0.1225; hi = -0.0025; break;
  }
}

int run_scan(const ScanArgs& a) {
  GadgetRegime regime = parse_regime(a.regime);
  if (a.points < 1) throw std::invalid_argument("scan needs at least one grid point");
  double lo = a.pmin, hi = a.pmax;
  if (lo == 0.0 && hi == 0.0) regime_default_range(regime, lo, hi);
  std::vector<double> grid;
  for (int i = 0; i < a.points; ++i)
    grid.push_back(a.points == 1 ? lo : lo + (hi - lo) * i / (a.points - 1));
  std::vector<ScanRow> rows = scan_inequalities(regime, grid);
  std::ostringstream out;
  out << "p,d,f1,f2,sign_ok\n";
  out.precision(12);
  for (const ScanRow& row : rows)
    out << row.p << ',' << row.d << ',' << row.f1 << ',' << row.f2 << ','
        << (row.sign_ok ? 1 : 0) << '\n';
  write_text(a.output, out.str());
  return 0;
}

struct BenchArgs {
  std::vector<std::string> graphs;
  std::vector<std::string> algos;
  std::vector<double> ps;
  std::string output;
  int suite = 0, iters = 100, fw_iters = 500, limit = 22;
  unsigned seed = 1;
  double eps = 0.5;
  bool weighted = false;
};

struct BenchCell {
  std::string graph_id;
  const Graph* graph;
  std::string algo;
  double p;
};

std::string bench_row(const BenchArgs& a, const BenchCell& cell) {
  const Graph& g = *cell.graph;
  double density = 0.0;
  int size = 0;
  auto t0 = std::chrono::steady_clock::now();
  if (cell.algo == "greedy-p") {
    PeelResult r = greedy_p(g, cell.p);
    density = r.best_density.value;
    size = static_cast<int>(r.best_set.size());
  } else if (cell.algo == "lazy") {
    PeelResult r = lazy_greedy_p(g, cell.p, a.eps);
    density = r.best_density.value;
    size = static_cast<int>(r.best_set.size());
  } else if (cell.algo == "simple") {
    PeelResult r = simple_greedy_p(g, cell.p);
    density = r.best_density.value;
    size = static_cast<int>(r.best_set.size());
  } else if (cell.algo == "greedypp") {
    IterState st = greedy_pp(g, cell.p, a.iters, InnerMode::exact());
    density = st.best.best_density.value;
    size = static_cast<int>(st.best.best_set.size());
  } else if (cell.algo == "simplepp") {
    SimplePPResult res = simple_pp(g, a.iters, {cell.p});
    density = res.per_p[0].best.best_density.value;
    size = static_cast<int>(res.per_p[0].best.best_set.size());
  } else if (cell.algo == "fw") {
    FWState st = frank_wolfe(g, cell.p, a.fw_iters);
    density = st.rounded.best_density.value;
    size = static_cast<int>(st.rounded.best_set.size());
  } else if (cell.algo == "oracle") {
    OracleResult r = brute_force_opt(g, cell.p, a.limit);
    density = r.best_density.value;
    size = static_cast<int>(r.best_set.size());
  } else {
    throw std::invalid_argument("unknown bench algorithm: " + cell.algo);
  }
  long long ms = to_ms(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  std::ostringstream row;
  row.precision(12);
  row << cell.graph_id << ',' << cell.algo << ',' << cell.p << ',' << density << ',' << size
      << ',' << ms << '\n';
  return row.str();
}

// Algorithms keep their own p-domain; skip cells outside it so one bench
// sweep can mix p < 1 and p >= 1 algorithms.
bool cell_applicable(const std::string& algo, double p) {
  if (algo == "greedy-p" || algo == "lazy" || algo == "greedypp" || algo == "simplepp")
    return algo == "simplepp" ? (p != 0.0 && p <= 1.0) : p > 0.0;
  if (algo == "fw") return p >= 1.0;
  if (algo == "simple") return p != 0.0 && p <= 1.0;
  return true;  // oracle: any nonzero p
}

Graph random_gnp(std::mt19937& rng, int n, double prob) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (true) {
    std::vector<Graph::RawEdge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < prob) edges.push_back({u, v, 1.0});
    if (!edges.empty()) return Graph::from_raw_edges(edges, false);
  }
}

int run_bench(const BenchArgs& a) {
  if (a.algos.empty()) throw std::invalid_argument("bench needs --algos");
  if (a.ps.empty()) throw std::invalid_argument("bench needs --ps");

  std::vector<std::pair<std::string, Graph>> graphs;
  for (const std::string& path : a.graphs) graphs.emplace_back(path, load_graph(path, a.weighted));
  if (a.suite > 0) {
    std::mt19937 rng(a.seed);
    std::uniform_int_distribution<int> pick_n(4, 10);
    for (int i = 0; i < a.suite; ++i) {
      int n = pick_n(rng);
      double prob = i % 2 == 0 ? 0.3 : 0.6;
      graphs.emplace_back("suite:" + std::to_string(a.seed) + ":" + std::to_string(i),
                          random_gnp(rng, n, prob));
    }
  }
  if (graphs.empty()) throw std::invalid_argument("bench needs --graphs or --suite");

  std::vector<BenchCell> cells;
  for (const auto& [id, g] : graphs)
    for (const std::string& algo : a.algos)
      for (double p : a.ps) {
        if (!cell_applicable(algo, p)) {
          std::cerr << "skip " << id << "," << algo << ",p=" << p << " (outside p-domain)\n";
          continue;
        }
        cells.push_back({id, &g, algo, p});
      }

  // Worker pool over independent cells; rows land in cell order so output is
  // deterministic no matter the interleaving.
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char* cap = std::getenv("PMDSG_THREADS")) {
    int v = std::atoi(cap);
    if (v >= 1) workers = std::min<unsigned>(workers, v);
  }
  workers = std::min<unsigned>(workers, cells.size() == 0 ? 1 : cells.size());

  std::vector<std::string> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        rows[i] = bench_row(a, cells[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::string out = "graph,algo,p,best_density,best_set_size,wall_ms\n";
  for (const std::string& row : rows) out += row;
  write_text(a.output, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-mean densest subgraph toolkit"};
  app.require_subcommand(1);

  PeelArgs peel;
  auto* cmd_peel = app.add_subcommand("peel", "single peeling run");
  cmd_peel->add_option("--algo", peel.algo, "greedy-p | lazy | simple")->required();
  cmd_peel->add_option("--p", peel.p, "mean exponent")->required();
  cmd_peel->add_option("--eps", peel.eps, "lazy key slack (lazy only, default 0.5)");
  cmd_peel->add_option("--input", peel.input, "edge list path")->required();
  cmd_peel->add_flag("--weighted", peel.weighted, "parse third column as weight");
  cmd_peel->add_option("--output", peel.output, "JSON output path (default stdout)");
  cmd_peel->add_flag("--emit-set", peel.emit_set, "include the best set's vertex labels");

  IterateArgs iter;
  auto* cmd_iterate = app.add_subcommand("iterate", "iterated peeling with loads");
  cmd_iterate->add_option("--algo", iter.algo, "greedypp | lazygreedypp | simplepp")->required();
  cmd_iterate->add_option("--p", iter.p, "mean exponent (greedypp variants)");
  cmd_iterate->add_option("--ps", iter.ps, "comma list of exponents (simplepp)")->delimiter(',');
  cmd_iterate->add_option("--iters", iter.iters, "number of passes (default 100)");
  cmd_iterate->add_option("--eps", iter.eps, "lazy key slack (lazygreedypp)");
  cmd_iterate->add_option("--input", iter.input, "edge list path")->required();
  cmd_iterate->add_flag("--weighted", iter.weighted, "parse third column as weight");
  cmd_iterate->add_option("--output", iter.output, "JSON output path (default stdout)");
  cmd_iterate->add_option("--traj", iter.traj, "write trajectory CSV here");
  cmd_iterate->add_flag("--emit-set", iter.emit_set, "include the best set's vertex labels");

  FwArgs fw;
  auto* cmd_fw = app.add_subcommand("fw", "Frank-Wolfe with fractional rounding");
  cmd_fw->add_option("--p", fw.p, "mean exponent (p >= 1)")->required();
  cmd_fw->add_option("--iters", fw.iters, "iteration count (default 500)");
  cmd_fw->add_option("--input", fw.input, "edge list path")->required();
  cmd_fw->add_flag("--weighted", fw.weighted, "parse third column as weight");
  cmd_fw->add_option("--output", fw.output, "JSON output path (default stdout)");
  cmd_fw->add_option("--traj", fw.traj, "write trajectory CSV here");
  cmd_fw->add_flag("--emit-set", fw.emit_set, "include the best set's vertex labels");

  OracleArgs oracle;
  auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive optimum (small graphs)");
  cmd_oracle->add_option("--p", oracle.p, "mean exponent")->required();
  cmd_oracle->add_option("--input", oracle.input, "edge list path")->required();
  cmd_oracle->add_flag("--weighted", oracle.weighted, "parse third column as weight");
  cmd_oracle->add_option("--limit", oracle.limit, "max vertex count (default 22)");
  cmd_oracle->add_option("--output", oracle.output, "JSON output path (default stdout)");
  cmd_oracle->add_flag("--emit-set", oracle.emit_set, "include the best set's vertex labels");

  GadgetArgs gadget;
  auto* cmd_gadget = app.add_subcommand("gadget", "build a decision gadget from an X3C file");
  cmd_gadget->add_option("--x3c", gadget.x3c, "X3C instance path")->required();
  cmd_gadget->add_option("--p", gadget.p, "mean exponent")->required();
  cmd_gadget->add_flag("--weighted", gadget.weighted, "use the weighted-clique regime");
  cmd_gadget->add_option("--out-graph", gadget.out_graph, "gadget edge list path (default stdout)");
  cmd_gadget->add_option("--out-meta", gadget.out_meta, "gadget metadata JSON path (default stdout)");
  cmd_gadget->add_flag("--decide", gadget.decide, "also run the brute-force decision");
  cmd_gadget->add_option("--limit", gadget.limit, "oracle vertex limit for --decide");

  ScanArgs scan;
  auto* cmd_scan = app.add_subcommand("scan", "inequality sign scan for a gadget regime");
  cmd_scan->add_option("--regime", scan.regime,
                       "weighted-pos | weighted-neg | unweighted-pos | unweighted-neg")
      ->required();
  cmd_scan->add_option("--pmin", scan.pmin, "grid start (default: regime interior)");
  cmd_scan->add_option("--pmax", scan.pmax, "grid end (default: regime interior)");
  cmd_scan->add_option("--points", scan.points, "grid size (default 50)");
  cmd_scan->add_option("--output", scan.output, "CSV output path (default stdout)");

  BenchArgs bench;
  auto* cmd_bench = app.add_subcommand("bench", "algorithm comparison table");
  cmd_bench->add_option("--graphs", bench.graphs, "edge list paths")->delimiter(',');
  cmd_bench->add_option("--suite", bench.suite, "also bench N seeded random graphs (n in [4,10])");
  cmd_bench->add_option("--seed", bench.seed, "suite RNG seed (default 1)");
  cmd_bench->add_option("--algos", bench.algos,
                        "comma list: greedy-p,lazy,simple,greedypp,simplepp,fw,oracle")
      ->delimiter(',');
  cmd_bench->add_option("--ps", bench.ps, "comma list of exponents")->delimiter(',');
  cmd_bench->add_option("--iters", bench.iters, "passes for greedypp/simplepp (default 100)");
  cmd_bench->add_option("--fw-iters", bench.fw_iters, "Frank-Wolfe iterations (default 500)");
  cmd_bench->add_option("--eps", bench.eps, "slack for the lazy variant (default 0.5)");
  cmd_bench->add_option("--limit", bench.limit, "oracle vertex limit (default 22)");
  cmd_bench->add_flag("--weighted", bench.weighted, "parse third column as weight");
  cmd_bench->add_option("--output", bench.output, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (cmd_peel->parsed()) return run_peel(peel);
    if (cmd_iterate->parsed()) return run_iterate(iter);
    if (cmd_fw->parsed()) return run_fw(fw);
    if (cmd_oracle->parsed()) return run_oracle(oracle);
    if (cmd_gadget->parsed()) return run_gadget(gadget);
    if (cmd_scan->parsed()) return run_scan(scan);
    if (cmd_bench->parsed()) return run_bench(bench);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
