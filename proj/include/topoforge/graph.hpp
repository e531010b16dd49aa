#pragma once

#include <string>
#include <utility>
#include <vector>

#include "topoforge/rational.hpp"

namespace topoforge {

using Edge = std::pair<int, int>;  // unordered pair, stored with first < second

// N-vertex degree-k simple connected graph. When `ring` is set, the edges
// (i, i+1 mod N) are all present and the vertex order is the embedded
// Hamiltonian cycle. Immutable after build_graph; safe for concurrent reads.
struct RegularGraph {
  int n = 0;
  int k = 0;
  bool ring = false;
  std::string name;
  std::vector<Edge> edges;            // sorted lexicographically, u < v
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  bool has_edge(int u, int v) const;
  bool is_ring_edge(int u, int v) const {
    int d = u < v ? v - u : u - v;
    return d == 1 || d == n - 1;
  }
};

// Validates and assembles a RegularGraph. Throws Error with code not_simple,
// not_regular, disconnected, ring_missing or bad_params.
RegularGraph build_graph(int n, int k, std::vector<Edge> edges, bool ring,
                         std::string name = "");

// All-pairs hop distances.
struct DistanceMatrix {
  int n = 0;
  std::vector<int> d;  // row-major n*n

  int at(int i, int j) const { return d[static_cast<size_t>(i) * n + j]; }
  // Sum over ordered pairs.
  long long total() const;
  int eccentricity(int v) const;
};

// Breadth-first traversal from every source.
DistanceMatrix all_pairs_distances(const RegularGraph& g);

struct GraphMetrics {
  int diameter = 0;
  Rational mpl;                    // mean over unordered distinct pairs
  int girth = 0;
  long long cable_1d = 0;          // sum of min(|u-v|, N-|u-v|) over edges
  long long dist_sum_ordered = 0;  // raw BFS distance total, ordered pairs
};

GraphMetrics compute_metrics(const RegularGraph& g);
GraphMetrics compute_metrics(const RegularGraph& g, const DistanceMatrix& dm);

// Relabels vertices: vertex v becomes perm[v]. The result is revalidated; the
// ring flag is dropped since the cycle order is not preserved in general.
RegularGraph relabel(const RegularGraph& g, const std::vector<int>& perm);

}  // namespace topoforge
