#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topoforge/graph.hpp"

namespace topoforge {

// Canonical comparison topologies. Each generator is deterministic: the same
// spec always yields the same edge list, byte for byte.
struct TopologySpec {
  enum class Kind { Ring, Wagner, Bidiakis, Chvatal, Circulant, Torus, Hypercube, Dragonfly };

  Kind kind = Kind::Ring;
  int n = 0;                 // Ring/Wagner/Bidiakis/Circulant vertex count
  std::vector<int> offsets;  // Circulant chord offsets
  std::vector<int> dims;     // Torus dimensions
  int hyper_d = 0;           // Hypercube dimension
  int df_a = 0, df_h = 0;    // Dragonfly routers per group / global links per router
};

// CLI grammar: ring:N, wagner:N, bidiakis:N, chvatal, circulant:N:o1,o2,...,
// torus:d1xd2x..., hypercube:D, dragonfly:a,h.
TopologySpec parse_spec(const std::string& s);
std::string spec_string(const TopologySpec& spec);

RegularGraph generate(const TopologySpec& spec);
inline RegularGraph generate(const std::string& s) { return generate(parse_spec(s)); }

// The unique (a, h) with a(ah+1) = n and a-1+h = k, largest a preferred.
std::optional<std::pair<int, int>> dragonfly_params(int n, int k);

}  // namespace topoforge
