#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "topoforge/graph.hpp"
#include "topoforge/rational.hpp"
#include "topoforge/rng.hpp"

namespace topoforge {

// Annealing schedule and search parameters for one chain.
struct SAConfig {
  int n = 0;
  int k = 0;
  double t_start = 1.0;
  double t_end = 1e-4;
  long long n_iter = 1'000'000;
  int symmetry = 1;          // rotation order s (divisor of n); 1 = none
  std::uint64_t seed = 0;
  bool stop_at_bound = false;
  long long trace_stride = 0;  // 0 = no trace
  bool validate_every_step = false;  // test hook; expensive
};

struct TracePoint {
  long long iter = 0;
  double temperature = 0.0;
  double current_mpl = 0.0;
  double best_mpl = 0.0;
};

struct SearchResult {
  RegularGraph best;
  Rational best_mpl;
  Rational bound;           // Cerf MPL lower bound for (n,k)
  long long iterations_used = 0;
  long long accept_count = 0;
  long long uphill_accepts = 0;  // accepted moves with strictly positive delta
  long long inspected = 0;       // exhaustive search: candidates generated
  std::vector<TracePoint> trace;
};

// gamma with t_start * gamma^n_iter = t_end (exponential cooling).
double cooling_rate(double t_start, double t_end, long long n_iter);

// Orbit of an edge under rotation by n/s, deduplicated as unordered pairs,
// sorted ascending.
std::vector<Edge> symmetric_orbit(int n, int s, Edge e);

// One 2-opt rewiring of two non-ring edges; nullopt when the sampled rewiring
// would duplicate an edge (caller resamples). Degree sequence and the
// embedded ring are preserved, so the result is always valid.
std::optional<RegularGraph> edge_swap_candidate(const RegularGraph& g, Rng& rng);

// Simulated annealing over Hamiltonian k-regular graphs, minimizing MPL.
SearchResult sa_search(const SAConfig& config);

// Independent chains with seeds seed+i; best of chains by
// (MPL, cable_1d, chain index). Chains run in parallel up to `jobs`.
SearchResult sa_search_multi(const SAConfig& config, int chains, int jobs = 1);

// Minimal-MPL graph over all k-regular connected graphs on n labeled
// vertices (neighborhood of vertex 0 fixed to {1..k}, which loses no
// isomorphism class). Guarded to n <= 12 for k=3, n <= 10 for k=4.
// nullopt when no graph satisfies the constraints.
std::optional<SearchResult> exhaustive_tiny(int n, int k,
                                            std::optional<int> girth_min = std::nullopt);

}  // namespace topoforge
