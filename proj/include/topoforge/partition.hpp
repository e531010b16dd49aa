#pragma once

#include <cstdint>
#include <vector>

#include "topoforge/graph.hpp"

namespace topoforge {

// Balanced two-way cut: |side_a| = floor(N/2), cut = edges crossing sides.
struct PartitionResult {
  long long cut = 0;
  std::vector<int> side_a;  // sorted ascending
  bool exact = false;
};

// Global minimum by branch-and-bound over vertex assignments. Guarded to
// N <= 32; throws too_large beyond.
PartitionResult bisection_exact(const RegularGraph& g);

// Best cut over `restarts` runs of randomized balanced initialization plus
// Fiduccia-Mattheyses-style pass refinement. Restarts are independent; up to
// `jobs` run concurrently, and the merge (lowest cut, then lexicographically
// smallest side) is the same for any schedule. Deterministic for a fixed
// seed.
PartitionResult bisection_heuristic(const RegularGraph& g, int restarts, std::uint64_t seed,
                                    int jobs = 1);

// Recomputed cut for a given side (test / verification hook).
long long cut_of(const RegularGraph& g, const std::vector<int>& side_a);

}  // namespace topoforge
