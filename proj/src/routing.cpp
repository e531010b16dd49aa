#include "topoforge/routing.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "topoforge/error.hpp"

namespace topoforge {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

RoutingTable build_routing(const RegularGraph& g, TieBreak tie_break) {
  const int n = g.n;
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  RoutingTable rt;
  rt.n = n;
  rt.dist.assign(static_cast<size_t>(n) * n, kInf);
  for (int i = 0; i < n; ++i) rt.dist[static_cast<size_t>(i) * n + i] = 0;
  for (const auto& [u, v] : g.edges) {
    rt.dist[static_cast<size_t>(u) * n + v] = 1;
    rt.dist[static_cast<size_t>(v) * n + u] = 1;
  }
  for (int m = 0; m < n; ++m) {
    const int* dm = &rt.dist[static_cast<size_t>(m) * n];
    for (int i = 0; i < n; ++i) {
      int* di = &rt.dist[static_cast<size_t>(i) * n];
      const int dim = di[m];
      if (dim == kInf) continue;
      for (int j = 0; j < n; ++j)
        if (dim + dm[j] < di[j]) di[j] = dim + dm[j];
    }
  }

  // Tie-breaks are derived from the distance matrix alone, so rebuilding
  // always produces the same table.
  rt.next.assign(static_cast<size_t>(n) * n, -1);
  std::vector<int> candidates;
  for (int s = 0; s < n; ++s)
    for (int d = 0; d < n; ++d) {
      if (s == d) continue;
      candidates.clear();
      for (int w : g.adj[s]) {  // adj is sorted ascending
        if (rt.distance(w, d) + 1 != rt.distance(s, d)) continue;
        if (tie_break == TieBreak::lowest_index) {
          candidates.push_back(w);
          break;
        }
        candidates.push_back(w);
      }
      int pick = 0;
      if (tie_break == TieBreak::balanced && candidates.size() > 1) {
        std::uint64_t h = splitmix64((static_cast<std::uint64_t>(s) << 32) |
                                     static_cast<std::uint64_t>(d));
        pick = static_cast<int>(h % candidates.size());
      }
      rt.next[static_cast<size_t>(s) * n + d] = candidates[pick];
    }
  return rt;
}

std::vector<int> trace_path(const RoutingTable& rt, int s, int d) {
  if (s == d) throw Error(errc::bad_params, "trace_path needs s != d");
  std::vector<int> path{s};
  int cur = s;
  while (cur != d) {
    cur = rt.next_hop(cur, d);
    path.push_back(cur);
  }
  return path;
}

double LinkLoads::max() const {
  double m = 0.0;
  for (double x : load) m = std::max(m, x);
  return m;
}

double LinkLoads::total() const {
  double t = 0.0;
  for (double x : load) t += x;
  return t;
}

LinkLoads link_loads(const RoutingTable& rt, std::span<const TrafficEntry> traffic) {
  LinkLoads ll;
  ll.n = rt.n;
  ll.load.assign(static_cast<size_t>(rt.n) * rt.n, 0.0);
  for (const auto& t : traffic) {
    if (t.weight < 0) throw Error(errc::bad_params, "traffic weights must be >= 0");
    if (t.src == t.dst) continue;
    int cur = t.src;
    while (cur != t.dst) {
      int nxt = rt.next_hop(cur, t.dst);
      ll.load[static_cast<size_t>(cur) * rt.n + nxt] += t.weight;
      cur = nxt;
    }
  }
  return ll;
}

std::vector<TrafficEntry> uniform_alltoall(int n, double weight) {
  std::vector<TrafficEntry> t;
  t.reserve(static_cast<size_t>(n) * (n - 1));
  for (int s = 0; s < n; ++s)
    for (int d = 0; d < n; ++d)
      if (s != d) t.push_back({s, d, weight});
  return t;
}

}  // namespace topoforge
