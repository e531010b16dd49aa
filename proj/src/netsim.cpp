#include "topoforge/netsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "topoforge/error.hpp"
#include "topoforge/generators.hpp"
#include "topoforge/partition.hpp"
#include "topoforge/rng.hpp"

namespace topoforge {

Benchmark benchmark_from_name(const std::string& name) {
  if (name == "pingpong") return Benchmark::pingpong;
  if (name == "alltoall") return Benchmark::alltoall;
  if (name == "bcast") return Benchmark::bcast;
  if (name == "scatter") return Benchmark::scatter;
  if (name == "reduce") return Benchmark::reduce;
  if (name == "beff") return Benchmark::beff;
  throw Error(errc::parse_error, "unknown benchmark '" + name + "'");
}

std::string benchmark_name(Benchmark b) {
  switch (b) {
    case Benchmark::pingpong: return "pingpong";
    case Benchmark::alltoall: return "alltoall";
    case Benchmark::bcast: return "bcast";
    case Benchmark::scatter: return "scatter";
    case Benchmark::reduce: return "reduce";
    case Benchmark::beff: return "beff";
  }
  return "?";
}

double pingpong_latency(const DistanceMatrix& dm, const NetParams& p, int s, int d,
                        double msg_bytes) {
  if (s == d) throw Error(errc::bad_params, "ping-pong needs s != d");
  double per_hop = p.link_latency + msg_bytes / p.link_bandwidth;
  return p.startup + dm.at(s, d) * per_hop;
}

LatencyFit fit_latency_model(std::span<const std::pair<double, double>> samples) {
  if (samples.size() < 2) throw Error(errc::degenerate_input, "need at least two samples");
  double n = static_cast<double>(samples.size());
  double sh = 0, st = 0;
  for (const auto& [h, t] : samples) {
    sh += h;
    st += t;
  }
  double mh = sh / n, mt = st / n;
  double shh = 0, stt = 0, sht = 0;
  for (const auto& [h, t] : samples) {
    shh += (h - mh) * (h - mh);
    stt += (t - mt) * (t - mt);
    sht += (h - mh) * (t - mt);
  }
  if (shh == 0.0) throw Error(errc::degenerate_input, "all hop distances equal");
  LatencyFit fit;
  fit.alpha = sht / shh;
  fit.t0 = mt - fit.alpha * mh;
  fit.rho = stt == 0.0 ? 0.0 : sht / std::sqrt(shh * stt);
  return fit;
}

double alltoall_time(const RegularGraph& g, const RoutingTable& rt, const NetParams& p,
                     double msg_bytes) {
  if (msg_bytes <= 0) throw Error(errc::bad_params, "message size must be positive");
  auto traffic = uniform_alltoall(g.n, msg_bytes);
  LinkLoads loads = link_loads(rt, traffic);
  int diameter = 0;
  for (int x : rt.dist) diameter = std::max(diameter, x);
  return p.startup + diameter * p.link_latency + loads.max() / p.link_bandwidth;
}

double rooted_collective_time(const RegularGraph& g, const DistanceMatrix& dm,
                              const NetParams& p, double msg_bytes, Collective kind) {
  if (msg_bytes <= 0) throw Error(errc::bad_params, "message size must be positive");
  double serialize = msg_bytes / p.link_bandwidth;
  double sum = 0.0;
  for (int root = 0; root < g.n; ++root) {
    int depth = dm.eccentricity(root);
    double t;
    if (kind == Collective::scatter) {
      // Root egress serialization over its k ports plus propagation.
      double fan = std::ceil(static_cast<double>(g.n - 1) / g.k);
      t = fan * serialize + depth * p.link_latency;
    } else {  // bcast and its mirror, reduce
      t = depth * (p.link_latency + serialize);
    }
    sum += p.startup + t;
  }
  return sum / g.n;
}

double pattern_throughput(const RoutingTable& rt, const NetParams& p,
                          std::span<const std::pair<int, int>> pairs, double msg_bytes) {
  std::vector<TrafficEntry> traffic;
  traffic.reserve(pairs.size());
  int max_hops = 0;
  double total_bytes = 0.0;
  for (const auto& [s, d] : pairs) {
    if (s == d) continue;
    traffic.push_back({s, d, msg_bytes});
    max_hops = std::max(max_hops, rt.distance(s, d));
    total_bytes += msg_bytes;
  }
  if (traffic.empty()) return 0.0;
  LinkLoads loads = link_loads(rt, traffic);
  double t = p.startup + max_hops * p.link_latency + loads.max() / p.link_bandwidth;
  return total_bytes / t;
}

double effective_bandwidth(const RegularGraph& g, const RoutingTable& rt, const NetParams& p,
                           std::span<const double> sizes, int rounds, std::uint64_t seed) {
  if (sizes.empty()) throw Error(errc::bad_params, "need at least one message size");
  std::vector<std::vector<std::pair<int, int>>> patterns;
  std::vector<std::pair<int, int>> ring_pattern;
  for (int i = 0; i < g.n; ++i) ring_pattern.emplace_back(i, (i + 1) % g.n);
  patterns.push_back(std::move(ring_pattern));
  Rng rng(seed);
  for (int r = 0; r < rounds; ++r) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = g.n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below_int(i + 1)]);
    std::vector<std::pair<int, int>> pat;
    for (int i = 0; i < g.n; ++i)
      if (perm[i] != i) pat.emplace_back(i, perm[i]);
    patterns.push_back(std::move(pat));
  }
  double sum = 0.0;
  int count = 0;
  for (const auto& pat : patterns) {
    if (pat.empty()) continue;  // a sampled permutation may be the identity
    for (double m : sizes) {
      sum += pattern_throughput(rt, p, pat, m);
      ++count;
    }
  }
  return count > 0 ? sum / count : 0.0;
}

namespace {

double benchmark_value(Benchmark b, const RegularGraph& g, const RoutingTable& rt,
                       const DistanceMatrix& dm, const NetParams& p,
                       const CompareOptions& opts) {
  switch (b) {
    case Benchmark::pingpong: {
      double sum = 0.0;
      long long pairs = 0;
      for (int s = 0; s < g.n; ++s)
        for (int d = 0; d < g.n; ++d)
          if (s != d) {
            sum += pingpong_latency(dm, p, s, d, opts.msg_bytes);
            ++pairs;
          }
      return sum / static_cast<double>(pairs);
    }
    case Benchmark::alltoall:
      return alltoall_time(g, rt, p, opts.msg_bytes);
    case Benchmark::bcast:
      return rooted_collective_time(g, dm, p, opts.msg_bytes, Collective::bcast);
    case Benchmark::scatter:
      return rooted_collective_time(g, dm, p, opts.msg_bytes, Collective::scatter);
    case Benchmark::reduce:
      return rooted_collective_time(g, dm, p, opts.msg_bytes, Collective::reduce);
    case Benchmark::beff:
      return effective_bandwidth(g, rt, p, opts.beff_sizes, opts.beff_rounds, opts.seed);
  }
  return 0.0;
}

}  // namespace

std::vector<SimReport> compare_topologies(std::span<const RegularGraph> roster,
                                          const NetParams& p, const CompareOptions& opts) {
  if (roster.empty()) return {};
  const int n = roster[0].n;
  for (const auto& g : roster)
    if (g.n != n) throw Error(errc::mixed_sizes, "roster graphs must share N");

  std::vector<const RegularGraph*> graphs;
  for (const auto& g : roster) graphs.push_back(&g);
  RegularGraph baseline;
  const RegularGraph* ring = nullptr;
  for (const auto& g : roster)
    if (g.k == 2) ring = &g;  // the ring is the unique connected 2-regular graph
  if (!ring) {
    baseline = generate("ring:" + std::to_string(n));
    ring = &baseline;
    graphs.push_back(ring);
  }

  struct Cached {
    RoutingTable rt;
    DistanceMatrix dm;
    GraphMetrics metrics;
    long long bisection;
    bool bisection_exact;
  };
  std::vector<Cached> cache(graphs.size());
  for (size_t i = 0; i < graphs.size(); ++i) {
    cache[i].rt = build_routing(*graphs[i], opts.tie_break);
    cache[i].dm = all_pairs_distances(*graphs[i]);
    cache[i].metrics = compute_metrics(*graphs[i], cache[i].dm);
    if (graphs[i]->n <= 32) {
      cache[i].bisection = bisection_exact(*graphs[i]).cut;
      cache[i].bisection_exact = true;
    } else {
      cache[i].bisection =
          bisection_heuristic(*graphs[i], opts.bisection_restarts, opts.seed).cut;
      cache[i].bisection_exact = false;
    }
  }
  size_t ring_idx = 0;
  while (graphs[ring_idx] != ring) ++ring_idx;

  std::vector<SimReport> rows;
  for (Benchmark b : opts.benchmarks) {
    double ring_value = benchmark_value(b, *ring, cache[ring_idx].rt, cache[ring_idx].dm, p, opts);
    for (size_t i = 0; i < graphs.size(); ++i) {
      double value = i == ring_idx
                         ? ring_value
                         : benchmark_value(b, *graphs[i], cache[i].rt, cache[i].dm, p, opts);
      SimReport row;
      row.topology = graphs[i]->name;
      row.n = graphs[i]->n;
      row.k = graphs[i]->k;
      row.mpl = cache[i].metrics.mpl.value();
      row.diameter = cache[i].metrics.diameter;
      row.bisection = cache[i].bisection;
      row.benchmark = benchmark_name(b);
      row.msg_bytes = b == Benchmark::beff ? 0.0 : opts.msg_bytes;
      row.abs_value = value;
      // Speed ratio: reciprocal runtime for time benchmarks, direct for beff.
      row.ratio_to_ring = i == ring_idx ? 1.0
                          : b == Benchmark::beff ? value / ring_value
                                                 : ring_value / value;
      rows.push_back(std::move(row));
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SimReport& a, const SimReport& b) {
    if (a.benchmark != b.benchmark) return a.benchmark < b.benchmark;
    return a.mpl < b.mpl;
  });
  return rows;
}

}  // namespace topoforge
