#include "topoforge/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "topoforge/bounds.hpp"
#include "topoforge/error.hpp"
#include "topoforge/generators.hpp"
#include "topoforge/graph.hpp"
#include "topoforge/io.hpp"
#include "topoforge/netsim.hpp"
#include "topoforge/optimizer.hpp"
#include "topoforge/partition.hpp"
#include "topoforge/routing.hpp"

namespace fs = std::filesystem;

namespace topoforge::cli {

namespace {

std::string fmt(double v, const char* spec = "%.9g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string timestamp_utc() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Reproducibility sidecar written next to every produced artifact set.
void write_manifest(const fs::path& base, const std::string& cmdline,
                    std::optional<std::uint64_t> seed,
                    const std::vector<fs::path>& inputs,
                    const std::vector<fs::path>& outputs) {
  nlohmann::json j;
  j["command"] = cmdline;
  j["version"] = kVersion;
  if (seed) j["seed"] = *seed;
  auto in = nlohmann::json::object();
  for (const auto& p : inputs) in[p.string()] = hex64(fnv1a64(read_text_file(p)));
  j["inputs"] = std::move(in);
  auto outj = nlohmann::json::object();
  for (const auto& p : outputs) outj[p.string()] = hex64(fnv1a64(read_text_file(p)));
  j["outputs"] = std::move(outj);
  j["timestamp"] = timestamp_utc();
  write_text_file(base.string() + ".manifest.json", j.dump(2) + "\n");
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "topoforge";
  for (const auto& a : args) s += " " + a;
  return s;
}

std::vector<fs::path> write_graph_bundle(const RegularGraph& g, const fs::path& base) {
  fs::path edges = base.string() + ".edges";
  fs::path json = base.string() + ".json";
  fs::path dot = base.string() + ".dot";
  write_text_file(edges, to_edge_list(g));
  write_text_file(json, to_json(g));
  write_text_file(dot, to_dot(g));
  return {edges, json, dot};
}

std::string metrics_line(const std::string& label, const RegularGraph& g,
                         const GraphMetrics& m, int precision) {
  std::ostringstream os;
  os << label << " n=" << g.n << " k=" << g.k << " D=" << m.diameter
     << " MPL=" << m.mpl.to_fixed(precision) << " girth=" << m.girth;
  return os.str();
}

int env_jobs() {
  if (const char* v = std::getenv("TOPOFORGE_JOBS")) {
    int j = std::atoi(v);
    if (j >= 1) return j;
  }
  return 1;
}

nlohmann::json partition_json(const PartitionResult& r) {
  nlohmann::json j;
  j["cut"] = r.cut;
  j["exact"] = r.exact;
  j["side_a"] = r.side_a;
  return j;
}

std::string table_csv(const std::vector<std::string>& specs, int restarts,
                      std::uint64_t seed, int precision, int jobs) {
  std::ostringstream os;
  os << "name,n,k,diameter,mpl,bw,bw_exact,girth,mpl_bound,diameter_bound,mpl_gap,"
        "diameter_gap\n";
  for (const auto& s : specs) {
    RegularGraph g = generate(s);
    GraphMetrics m = compute_metrics(g);
    BoundReport b = gap_report(g, m);
    PartitionResult part = g.n <= 32 ? bisection_exact(g)
                                     : bisection_heuristic(g, restarts, seed, jobs);
    os << g.name << ',' << g.n << ',' << g.k << ',' << m.diameter << ','
       << m.mpl.to_fixed(precision) << ',' << part.cut << ',' << (part.exact ? 1 : 0) << ','
       << m.girth << ',' << b.mpl_lower.to_fixed(precision) << ',' << b.diameter_lower << ','
       << b.mpl_gap.to_fixed(precision) << ',' << b.diameter_gap << '\n';
  }
  return os.str();
}

std::string report_csv(const std::vector<SimReport>& rows, int precision) {
  std::ostringstream os;
  os << "topology,n,k,mpl,diameter,bw,benchmark,msg_bytes,abs_value,ratio_to_ring\n";
  for (const auto& r : rows) {
    char mpl[32];
    std::snprintf(mpl, sizeof mpl, "%.*f", precision, r.mpl);
    os << r.topology << ',' << r.n << ',' << r.k << ',' << mpl << ',' << r.diameter << ','
       << r.bisection << ',' << r.benchmark << ',' << fmt(r.msg_bytes, "%.0f") << ','
       << fmt(r.abs_value) << ',' << fmt(r.ratio_to_ring) << '\n';
  }
  return os.str();
}

std::string scatter_csv(const std::vector<SimReport>& rows) {
  std::ostringstream os;
  os << "benchmark,mpl,ratio_to_ring\n";
  for (const auto& r : rows)
    os << r.benchmark << ',' << fmt(r.mpl) << ',' << fmt(r.ratio_to_ring) << '\n';
  return os.str();
}

nlohmann::json search_report(const SearchResult& res, const GraphMetrics& m,
                             const SAConfig& cfg, int chains, int precision) {
  nlohmann::json j;
  j["n"] = cfg.n;
  j["k"] = cfg.k;
  j["seed"] = cfg.seed;
  j["chains"] = chains;
  j["bound"] = std::to_string(res.bound.num) + "/" + std::to_string(res.bound.den);
  j["bound_decimal"] = res.bound.to_fixed(precision);
  j["best_mpl"] = std::to_string(res.best_mpl.num) + "/" + std::to_string(res.best_mpl.den);
  j["best_mpl_decimal"] = res.best_mpl.to_fixed(precision);
  j["mpl_gap_decimal"] = (res.best_mpl - res.bound).to_fixed(precision + 2);
  j["diameter"] = m.diameter;
  j["girth"] = m.girth;
  j["cable_1d"] = m.cable_1d;
  j["iterations"] = res.iterations_used;
  j["accepts"] = res.accept_count;
  j["acceptance_ratio"] =
      res.iterations_used > 0
          ? static_cast<double>(res.accept_count) / static_cast<double>(res.iterations_used)
          : 0.0;
  return j;
}

std::string trace_csv(const std::vector<TracePoint>& trace) {
  std::ostringstream os;
  os << "iter,temperature,current_mpl,best_mpl\n";
  for (const auto& t : trace)
    os << t.iter << ',' << fmt(t.temperature) << ',' << fmt(t.current_mpl) << ','
       << fmt(t.best_mpl) << '\n';
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Low-latency regular network topology toolkit"};
  app.set_version_flag("--version", std::string("topoforge ") + kVersion);
  app.require_subcommand(1);
  int jobs = env_jobs();
  app.add_option("--jobs", jobs, "worker pool size (env TOPOFORGE_JOBS)");
  const std::string cmdline = join_args(args);

  // generate
  auto* c_gen = app.add_subcommand("generate", "generate a named topology");
  std::string gen_spec, gen_out;
  int precision = 2;
  c_gen->add_option("spec", gen_spec, "topology spec, e.g. torus:4x8")->required();
  c_gen->add_option("-o,--out", gen_out, "output base path")->required();
  c_gen->add_option("--precision", precision, "MPL decimals");
  c_gen->callback([&] {
    RegularGraph g = generate(gen_spec);
    auto outputs = write_graph_bundle(g, gen_out);
    write_manifest(gen_out, cmdline, std::nullopt, {}, outputs);
    out << metrics_line(fs::path(gen_out).filename().string(), g, compute_metrics(g), precision)
        << "\n";
  });

  // metrics
  auto* c_met = app.add_subcommand("metrics", "graph metrics for a graph file");
  std::string met_file;
  c_met->add_option("file", met_file, "graph file (.edges or .json)")->required();
  c_met->add_option("--precision", precision, "MPL decimals");
  c_met->callback([&] {
    RegularGraph g = read_graph_file(met_file);
    GraphMetrics m = compute_metrics(g);
    out << metrics_line(g.name.empty() ? met_file : g.name, g, m, precision)
        << " cable_1d=" << m.cable_1d << "\n";
  });

  // bounds
  auto* c_bnd = app.add_subcommand("bounds", "MPL / diameter lower bounds for (N,k)");
  int bnd_n = 0, bnd_k = 0;
  c_bnd->add_option("N", bnd_n)->required();
  c_bnd->add_option("K", bnd_k)->required();
  c_bnd->add_option("--precision", precision, "decimals");
  c_bnd->callback([&] {
    Rational mpl = mpl_lower_bound(bnd_n, bnd_k);
    out << "mpl_bound=" << mpl.num << "/" << mpl.den << " (" << mpl.to_fixed(precision) << ")"
        << " diameter_bound=" << diameter_lower_bound(bnd_n, bnd_k) << "\n";
  });

  // optimize / pipeline share options
  struct OptArgs {
    int n = 0, k = 0;
    double t_start = 1.0, t_end = 1e-4;
    long long iters = 1'000'000;
    int symmetry = 1, chains = 1;
    std::uint64_t seed = 1;
    bool stop_at_bound = false;
    std::string out_base, trace_file;
  } oa;
  auto add_opt_options = [&](CLI::App* c) {
    c->add_option("N", oa.n)->required();
    c->add_option("K", oa.k)->required();
    c->add_option("--t-start", oa.t_start, "initial temperature");
    c->add_option("--t-end", oa.t_end, "final temperature");
    c->add_option("--iters", oa.iters, "iteration budget per chain");
    c->add_option("--symmetry", oa.symmetry, "rotation order (divisor of N)");
    c->add_option("--chains", oa.chains, "independent chains");
    c->add_option("--seed", oa.seed, "RNG seed");
    c->add_flag("--stop-at-bound", oa.stop_at_bound, "stop when the Cerf bound is attained");
    c->add_option("--trace", oa.trace_file, "per-iteration trace CSV");
    c->add_option("-o,--out", oa.out_base, "output base path")->required();
    c->add_option("--precision", precision, "MPL decimals");
  };

  auto run_search = [&]() -> std::pair<SearchResult, SAConfig> {
    SAConfig cfg;
    cfg.n = oa.n;
    cfg.k = oa.k;
    cfg.t_start = oa.t_start;
    cfg.t_end = oa.t_end;
    cfg.n_iter = oa.iters;
    cfg.symmetry = oa.symmetry;
    cfg.seed = oa.seed;
    cfg.stop_at_bound = oa.stop_at_bound;
    if (!oa.trace_file.empty()) cfg.trace_stride = std::max<long long>(1, oa.iters / 2000);
    SearchResult res = sa_search_multi(cfg, oa.chains, jobs);
    return {std::move(res), cfg};
  };

  auto emit_search = [&](const SearchResult& res, const SAConfig& cfg,
                         std::vector<fs::path>& outputs) {
    outputs = write_graph_bundle(res.best, oa.out_base);
    GraphMetrics m = compute_metrics(res.best);
    fs::path report_path = oa.out_base + ".report.json";
    write_text_file(report_path, search_report(res, m, cfg, oa.chains, precision).dump(2) + "\n");
    outputs.push_back(report_path);
    if (!oa.trace_file.empty()) {
      write_text_file(oa.trace_file, trace_csv(res.trace));
      outputs.push_back(oa.trace_file);
    }
    out << metrics_line(res.best.name, res.best, m, precision)
        << " bound=" << res.bound.to_fixed(precision) << " iters=" << res.iterations_used
        << "\n";
  };

  auto* c_opt = app.add_subcommand("optimize", "search a minimal-MPL (N,k) graph");
  add_opt_options(c_opt);
  c_opt->callback([&] {
    auto [res, cfg] = run_search();
    std::vector<fs::path> outputs;
    emit_search(res, cfg, outputs);
    write_manifest(oa.out_base, cmdline, oa.seed, {}, outputs);
  });

  auto* c_pipe = app.add_subcommand("pipeline", "optimize, report gaps, compare to presets");
  add_opt_options(c_pipe);
  c_pipe->callback([&] {
    auto [res, cfg] = run_search();
    std::vector<fs::path> outputs;
    emit_search(res, cfg, outputs);
    // Comparison roster: the found graph, the same-size ring, and the most
    // square torus when N factors with all dims >= 3.
    std::vector<RegularGraph> roster{res.best};
    for (int a = static_cast<int>(std::sqrt(static_cast<double>(oa.n))); a >= 3; --a)
      if (oa.n % a == 0 && oa.n / a >= 3) {
        roster.push_back(generate("torus:" + std::to_string(a) + "x" + std::to_string(oa.n / a)));
        break;
      }
    CompareOptions copts;
    copts.seed = oa.seed;
    auto rows = compare_topologies(roster, NetParams::defaults(), copts);
    fs::path cmp_path = oa.out_base + ".compare.csv";
    write_text_file(cmp_path, report_csv(rows, precision));
    outputs.push_back(cmp_path);
    write_manifest(oa.out_base, cmdline, oa.seed, {}, outputs);
  });

  // bisection
  auto* c_bis = app.add_subcommand("bisection", "balanced two-way cut of a graph");
  std::string bis_file;
  bool bis_exact = false;
  int bis_restarts = 64;
  std::uint64_t bis_seed = 1;
  c_bis->add_option("file", bis_file)->required();
  c_bis->add_flag("--exact", bis_exact, "branch-and-bound optimum (N <= 32)");
  c_bis->add_option("--restarts", bis_restarts, "heuristic restarts");
  c_bis->add_option("--seed", bis_seed, "RNG seed");
  c_bis->callback([&] {
    RegularGraph g = read_graph_file(bis_file);
    PartitionResult r =
        bis_exact ? bisection_exact(g) : bisection_heuristic(g, bis_restarts, bis_seed, jobs);
    out << partition_json(r).dump(2) << "\n";
  });

  // route
  auto* c_route = app.add_subcommand("route", "static shortest-path routing table");
  std::string route_file, route_out;
  bool route_dump = false;
  c_route->add_option("file", route_file)->required();
  c_route->add_flag("--dump", route_dump, "emit the next-hop matrix as CSV");
  c_route->add_option("-o,--out", route_out, "CSV path (default stdout)");
  c_route->callback([&] {
    RegularGraph g = read_graph_file(route_file);
    RoutingTable rt = build_routing(g);
    if (!route_dump) {
      out << "n=" << g.n << " pairs=" << g.n * (g.n - 1) << " routed\n";
      return;
    }
    std::ostringstream os;
    for (int s = 0; s < rt.n; ++s) {
      for (int d = 0; d < rt.n; ++d) os << (d ? "," : "") << rt.next_hop(s, d);
      os << '\n';
    }
    if (route_out.empty()) {
      out << os.str();
    } else {
      write_text_file(route_out, os.str());
      write_manifest(route_out, cmdline, std::nullopt, {route_file}, {route_out});
    }
  });

  // loads
  auto* c_loads = app.add_subcommand("loads", "per-directed-edge traffic under static routing");
  std::string loads_file, loads_pattern = "alltoall", loads_out;
  double loads_msg = 1.0;
  c_loads->add_option("file", loads_file)->required();
  c_loads->add_option("--pattern", loads_pattern, "traffic pattern (alltoall)");
  c_loads->add_option("--msg-size", loads_msg, "bytes per pair");
  c_loads->add_option("-o,--out", loads_out, "CSV path (default stdout)");
  c_loads->callback([&] {
    if (loads_pattern != "alltoall")
      throw Error(errc::parse_error, "unknown pattern '" + loads_pattern + "'");
    RegularGraph g = read_graph_file(loads_file);
    RoutingTable rt = build_routing(g);
    LinkLoads ll = link_loads(rt, uniform_alltoall(g.n, loads_msg));
    std::ostringstream os;
    os << "u,v,load\n";
    for (int u = 0; u < g.n; ++u)
      for (int v : g.adj[u]) os << u << ',' << v << ',' << fmt(ll.at(u, v)) << '\n';
    if (loads_out.empty()) {
      out << os.str();
    } else {
      write_text_file(loads_out, os.str());
      write_manifest(loads_out, cmdline, std::nullopt, {loads_file}, {loads_out});
    }
  });

  // simulate
  auto* c_sim = app.add_subcommand("simulate", "analytic benchmark comparison over a roster");
  std::vector<std::string> sim_roster, sim_bench = {"pingpong", "alltoall", "bcast",
                                                    "scatter",  "reduce",   "beff"};
  double sim_msg = 1 << 20;
  std::string sim_params = "default", sim_out, sim_scatter, sim_routing = "index";
  std::uint64_t sim_seed = 1;
  c_sim->add_option("--roster", sim_roster, "graph files or generator specs")
      ->required()
      ->expected(-1);
  c_sim->add_option("--benchmarks", sim_bench, "subset of pingpong,alltoall,bcast,scatter,reduce,beff")
      ->delimiter(',');
  c_sim->add_option("--msg-size", sim_msg, "bytes per message");
  c_sim->add_option("--params", sim_params, "default | taishan");
  c_sim->add_option("--routing", sim_routing,
                    "tie-break among equal-cost next hops: index | balanced");
  c_sim->add_option("--seed", sim_seed, "RNG seed");
  c_sim->add_option("--out", sim_out, "report CSV path (default stdout)");
  c_sim->add_option("--scatter", sim_scatter, "scatter-plot CSV path");
  c_sim->add_option("--precision", precision, "MPL decimals");
  c_sim->callback([&] {
    std::vector<RegularGraph> roster;
    for (const auto& item : sim_roster) {
      if (fs::exists(item))
        roster.push_back(read_graph_file(item));
      else
        roster.push_back(generate(item));
    }
    NetParams p;
    if (sim_params == "taishan")
      p = NetParams::taishan();
    else if (sim_params != "default")
      throw Error(errc::parse_error, "unknown params preset '" + sim_params + "'");
    CompareOptions copts;
    copts.benchmarks.clear();
    for (const auto& b : sim_bench) copts.benchmarks.push_back(benchmark_from_name(b));
    copts.msg_bytes = sim_msg;
    copts.seed = sim_seed;
    if (sim_routing == "balanced")
      copts.tie_break = TieBreak::balanced;
    else if (sim_routing != "index")
      throw Error(errc::parse_error, "unknown routing '" + sim_routing + "'");
    auto rows = compare_topologies(roster, p, copts);
    std::string csv = report_csv(rows, precision);
    if (sim_out.empty()) {
      out << csv;
    } else {
      write_text_file(sim_out, csv);
      std::vector<fs::path> inputs;
      for (const auto& item : sim_roster)
        if (fs::exists(item)) inputs.emplace_back(item);
      std::vector<fs::path> outputs{sim_out};
      if (!sim_scatter.empty()) {
        write_text_file(sim_scatter, scatter_csv(rows));
        outputs.emplace_back(sim_scatter);
      }
      write_manifest(sim_out, cmdline, sim_seed, inputs, outputs);
    }
  });

  // table
  auto* c_tab = app.add_subcommand("table", "graph-property table for a roster of specs");
  std::vector<std::string> tab_specs;
  std::string tab_out;
  int tab_restarts = 64;
  std::uint64_t tab_seed = 1;
  c_tab->add_option("specs", tab_specs, "generator specs")->expected(-1);
  c_tab->add_option("-o,--out", tab_out, "CSV path (default stdout)");
  c_tab->add_option("--restarts", tab_restarts, "bisection restarts for N > 32");
  c_tab->add_option("--seed", tab_seed, "RNG seed");
  c_tab->add_option("--precision", precision, "decimals");
  c_tab->callback([&] {
    std::string csv = table_csv(tab_specs, tab_restarts, tab_seed, precision, jobs);
    if (tab_out.empty()) {
      out << csv;
    } else {
      write_text_file(tab_out, csv);
      write_manifest(tab_out, cmdline, tab_seed, {}, {tab_out});
    }
  });

  // export-dot
  auto* c_dot = app.add_subcommand("export-dot", "Graphviz export of a graph file");
  std::string dot_file, dot_out;
  c_dot->add_option("file", dot_file)->required();
  c_dot->add_option("-o,--out", dot_out, "output .dot path")->required();
  c_dot->callback([&] {
    RegularGraph g = read_graph_file(dot_file);
    write_text_file(dot_out, to_dot(g));
    write_manifest(dot_out, cmdline, std::nullopt, {dot_file}, {dot_out});
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
  return 0;
}

}  // namespace topoforge::cli
