#pragma once

#include <vector>

#include "topoforge/graph.hpp"
#include "topoforge/rational.hpp"

namespace topoforge {

// Idealized distance shells around any vertex of an (n,k) regular graph: at
// most k(k-1)^(i-1) vertices can sit at hop distance i, filled greedily until
// the n-1 non-root vertices are placed.
struct ShellProfile {
  int n = 0;
  int k = 0;
  std::vector<long long> shell_sizes;  // entry i-1 = vertices at distance i
};

ShellProfile shell_profile(int n, int k);

// (sum_i i * shell_sizes[i]) / (n - 1), exact.
Rational mpl_lower_bound(int n, int k);

// Smallest d with 1 + sum_{i<=d} k(k-1)^(i-1) >= n.
int diameter_lower_bound(int n, int k);

struct BoundReport {
  Rational mpl_lower;
  int diameter_lower = 0;
  Rational mpl_gap;       // achieved - lower
  int diameter_gap = 0;   // achieved - lower
};

BoundReport gap_report(const RegularGraph& g);
BoundReport gap_report(const RegularGraph& g, const GraphMetrics& m);

}  // namespace topoforge
