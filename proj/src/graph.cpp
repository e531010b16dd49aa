#include "topoforge/graph.hpp"

#include <algorithm>
#include <queue>

#include "topoforge/error.hpp"

namespace topoforge {

bool RegularGraph::has_edge(int u, int v) const {
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

RegularGraph build_graph(int n, int k, std::vector<Edge> edges, bool ring,
                         std::string name) {
  if (n < 2 || k < 1 || k >= n)
    throw Error(errc::bad_params, "need 2 <= n and 1 <= k < n, got n=" +
                                      std::to_string(n) + " k=" + std::to_string(k));
  if ((static_cast<long long>(n) * k) % 2 != 0)
    throw Error(errc::bad_params, "n*k must be even");

  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(errc::bad_params, "edge endpoint out of range");
    if (u == v) throw Error(errc::not_simple, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw Error(errc::not_simple, "duplicate edge (" + std::to_string(edges[i].first) +
                                        "," + std::to_string(edges[i].second) + ")");

  RegularGraph g;
  g.n = n;
  g.k = k;
  g.ring = ring;
  g.name = std::move(name);
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  for (const auto& [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(g.adj[v].size()) != k)
      throw Error(errc::not_regular, "vertex " + std::to_string(v) + " has degree " +
                                         std::to_string(g.adj[v].size()) + ", expected " +
                                         std::to_string(k));
    std::sort(g.adj[v].begin(), g.adj[v].end());
  }

  // Connectivity by BFS from vertex 0.
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) throw Error(errc::disconnected, "graph is not connected");

  if (ring)
    for (int i = 0; i < n; ++i)
      if (!g.has_edge(i, (i + 1) % n))
        throw Error(errc::ring_missing, "ring edge (" + std::to_string(i) + "," +
                                            std::to_string((i + 1) % n) + ") absent");
  return g;
}

long long DistanceMatrix::total() const {
  long long s = 0;
  for (int x : d) s += x;
  return s;
}

int DistanceMatrix::eccentricity(int v) const {
  int e = 0;
  for (int j = 0; j < n; ++j) e = std::max(e, at(v, j));
  return e;
}

DistanceMatrix all_pairs_distances(const RegularGraph& g) {
  DistanceMatrix dm;
  dm.n = g.n;
  dm.d.assign(static_cast<size_t>(g.n) * g.n, -1);
  std::vector<int> queue(g.n);
  for (int src = 0; src < g.n; ++src) {
    int* dist = &dm.d[static_cast<size_t>(src) * g.n];
    dist[src] = 0;
    queue[0] = src;
    int head = 0, tail = 1;
    while (head < tail) {
      int u = queue[head++];
      for (int w : g.adj[u])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue[tail++] = w;
        }
    }
  }
  return dm;
}

namespace {

// Shortest cycle via BFS from every root: a non-tree edge (u,v) seen while
// expanding u closes a cycle of length d[u]+d[v]+1. The minimum over all
// roots is exact.
int girth_bfs(const RegularGraph& g) {
  int best = -1;
  std::vector<int> dist(g.n), parent(g.n), queue(g.n);
  for (int root = 0; root < g.n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    queue[0] = root;
    int head = 0, tail = 1;
    while (head < tail) {
      int u = queue[head++];
      for (int w : g.adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace

GraphMetrics compute_metrics(const RegularGraph& g) {
  return compute_metrics(g, all_pairs_distances(g));
}

GraphMetrics compute_metrics(const RegularGraph& g, const DistanceMatrix& dm) {
  GraphMetrics m;
  m.dist_sum_ordered = dm.total();
  m.diameter = 0;
  for (int x : dm.d) m.diameter = std::max(m.diameter, x);
  m.mpl = Rational(m.dist_sum_ordered, static_cast<long long>(g.n) * (g.n - 1));
  int gi = girth_bfs(g);
  if (gi < 0) throw Error(errc::bad_params, "girth undefined: graph is acyclic");
  m.girth = gi;
  m.cable_1d = 0;
  for (const auto& [u, v] : g.edges) {
    long long d = v - u;
    m.cable_1d += std::min(d, g.n - d);
  }
  return m;
}

RegularGraph relabel(const RegularGraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n)
    throw Error(errc::bad_params, "permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
  return build_graph(g.n, g.k, std::move(edges), false, g.name);
}

}  // namespace topoforge
