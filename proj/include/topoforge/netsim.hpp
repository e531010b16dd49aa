#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "topoforge/graph.hpp"
#include "topoforge/routing.hpp"

namespace topoforge {

// Link parameters for the analytic models. Defaults are gigabit bandwidth
// with 30 us per-link latency; the `taishan` preset carries the measured
// ping-pong fit of the reference cluster (T = 107.17 + 121.15h in us).
struct NetParams {
  double link_latency = 30e-6;     // seconds per hop
  double link_bandwidth = 125e6;   // bytes per second
  double startup = 0.0;            // per-message endpoint overhead, seconds

  static NetParams defaults() { return {}; }
  static NetParams taishan() { return {121.15e-6, 125e6, 107.17e-6}; }
};

struct LatencyFit {
  double t0 = 0.0;     // intercept
  double alpha = 0.0;  // seconds per hop
  double rho = 0.0;    // Pearson correlation
};

enum class Benchmark { pingpong, alltoall, bcast, scatter, reduce, beff };

Benchmark benchmark_from_name(const std::string& name);
std::string benchmark_name(Benchmark b);

// One-way store-and-forward latency: T0 + h * (l + m/B).
double pingpong_latency(const DistanceMatrix& dm, const NetParams& p, int s, int d,
                        double msg_bytes);

// Ordinary least squares of T against h plus Pearson rho; rho is defined as 0
// when the T variance vanishes. Throws degenerate_input when all h coincide.
LatencyFit fit_latency_model(std::span<const std::pair<double, double>> samples);

// Bottleneck model: every ordered pair injects one m-byte message on its
// static route; T = D*l + max directed link load / B.
double alltoall_time(const RegularGraph& g, const RoutingTable& rt, const NetParams& p,
                     double msg_bytes);

enum class Collective { bcast, scatter, reduce };

// Pipelined shortest-path-tree level model, averaged over all roots.
double rooted_collective_time(const RegularGraph& g, const DistanceMatrix& dm,
                              const NetParams& p, double msg_bytes, Collective kind);

// Completion-time throughput of one send pattern under the link-load
// bottleneck model.
double pattern_throughput(const RoutingTable& rt, const NetParams& p,
                          std::span<const std::pair<int, int>> pairs, double msg_bytes);

// Simplified b_eff: natural ring pairing plus `rounds` random permutations,
// averaged over patterns and message sizes.
double effective_bandwidth(const RegularGraph& g, const RoutingTable& rt, const NetParams& p,
                           std::span<const double> sizes, int rounds, std::uint64_t seed);

struct SimReport {
  std::string topology;
  int n = 0;
  int k = 0;
  double mpl = 0.0;
  int diameter = 0;
  long long bisection = 0;
  std::string benchmark;
  double msg_bytes = 0.0;
  double abs_value = 0.0;      // seconds, or bytes/s for beff
  double ratio_to_ring = 0.0;  // performance speed relative to the same-size ring
};

struct CompareOptions {
  std::vector<Benchmark> benchmarks{Benchmark::pingpong, Benchmark::alltoall,
                                    Benchmark::bcast,    Benchmark::scatter,
                                    Benchmark::reduce,   Benchmark::beff};
  double msg_bytes = 1 << 20;
  std::vector<double> beff_sizes{4096, 65536, 1048576};
  int beff_rounds = 4;
  std::uint64_t seed = 1;
  int bisection_restarts = 64;
  TieBreak tie_break = TieBreak::lowest_index;
};

// Rows sorted by (benchmark, ascending MPL), stable. A ring baseline is
// synthesized when the roster lacks one. Throws mixed_sizes when the roster
// spans different N.
std::vector<SimReport> compare_topologies(std::span<const RegularGraph> roster,
                                          const NetParams& p, const CompareOptions& opts);

}  // namespace topoforge
