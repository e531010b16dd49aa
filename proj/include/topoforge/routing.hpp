#pragma once

#include <span>
#include <vector>

#include "topoforge/graph.hpp"

namespace topoforge {

// Tie-breaking rule among equal-distance next-hop candidates.
//  lowest_index: always the smallest-index neighbor (the module default).
//  balanced: a fixed hash of (src, dst) picks among the candidates, spreading
//    equal-cost routes deterministically. Lowest-index routing funnels torus
//    traffic through low-index vertices; the balanced rule keeps the maximum
//    link load near the average, which is what a congestion-lowering static
//    routing setup achieves.
enum class TieBreak { lowest_index, balanced };

// All-pairs next-hop table from static shortest-path routing. Distances come
// from Floyd's algorithm; the next hop among equal-distance candidates is
// chosen by the tie-break rule, so the table is deterministic and loop-free.
struct RoutingTable {
  int n = 0;
  std::vector<int> dist;  // row-major n*n Floyd distances
  std::vector<int> next;  // next[s*n+d] = neighbor of s toward d; -1 on diagonal

  int distance(int s, int d) const { return dist[static_cast<size_t>(s) * n + d]; }
  int next_hop(int s, int d) const { return next[static_cast<size_t>(s) * n + d]; }
};

RoutingTable build_routing(const RegularGraph& g, TieBreak tie_break = TieBreak::lowest_index);

// [s, ..., d]; exactly distance(s,d)+1 vertices.
std::vector<int> trace_path(const RoutingTable& rt, int s, int d);

struct TrafficEntry {
  int src = 0;
  int dst = 0;
  double weight = 0.0;
};

// Per-directed-edge accumulated traffic. Each undirected edge is two
// independent channels (full duplex).
struct LinkLoads {
  int n = 0;
  std::vector<double> load;  // row-major n*n, nonzero only on adjacent pairs

  double at(int u, int v) const { return load[static_cast<size_t>(u) * n + v]; }
  double max() const;
  double total() const;
};

LinkLoads link_loads(const RoutingTable& rt, std::span<const TrafficEntry> traffic);

// All ordered pairs with equal weight.
std::vector<TrafficEntry> uniform_alltoall(int n, double weight);

}  // namespace topoforge
