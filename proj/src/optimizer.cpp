#include "topoforge/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "topoforge/bounds.hpp"
#include "topoforge/error.hpp"

namespace topoforge {

double cooling_rate(double t_start, double t_end, long long n_iter) {
  if (!(t_start >= t_end) || !(t_end > 0.0) || n_iter < 1)
    throw Error(errc::bad_params, "cooling needs t_start >= t_end > 0 and n_iter >= 1");
  return std::exp(std::log(t_end / t_start) / static_cast<double>(n_iter));
}

std::vector<Edge> symmetric_orbit(int n, int s, Edge e) {
  if (s < 1 || n % s != 0)
    throw Error(errc::bad_params, "rotation order must divide n");
  int q = n / s;
  std::vector<Edge> orbit;
  orbit.reserve(s);
  for (int j = 0; j < s; ++j) {
    int u = (e.first + j * q) % n;
    int v = (e.second + j * q) % n;
    orbit.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

namespace {

// Mutable graph state for the annealing loop: fixed ring plus chord orbits.
// With symmetry order 1 every orbit is a single edge and the orbit swap
// reduces to the plain 2-opt rewiring.
class AnnealState {
 public:
  struct Orbit {
    Edge rep;
    std::vector<Edge> edges;
  };

  AnnealState(int n, int k, int s) : n_(n), k_(k), s_(s), adj_(n), deg_(n, 0) {
    for (int i = 0; i < n; ++i) link(i, (i + 1) % n);
  }

  int chord_orbits() const { return static_cast<int>(orbits_.size()); }

  bool has_edge(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  // Random chord construction until every vertex reaches degree k. Orbits are
  // added whole; a failed attempt rolls back and retries from the bare ring.
  void randomize(Rng& rng, int max_attempts) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
      if (try_fill(rng)) return;
      clear_chords();
    }
    throw Error(errc::init_failure, "could not build a random start graph");
  }

  // Orbit-synchronized 2-opt: replaces orbits at indices i and j with orbits
  // of the rewired representatives. Returns false (state unchanged) when the
  // rewiring collides with an existing edge or breaks regularity.
  bool try_swap(int i, int j, bool cross) {
    Edge ab = orbits_[i].rep, cd = orbits_[j].rep;
    int a = ab.first, b = ab.second, c = cd.first, d = cd.second;
    if (a == c || a == d || b == c || b == d) return false;
    Edge r1 = cross ? Edge{std::min(a, d), std::max(a, d)} : Edge{std::min(a, c), std::max(a, c)};
    Edge r2 = cross ? Edge{std::min(b, c), std::max(b, c)} : Edge{std::min(b, d), std::max(b, d)};

    Orbit old_i = orbits_[i], old_j = orbits_[j];
    for (const Edge& e : old_i.edges) unlink(e.first, e.second);
    for (const Edge& e : old_j.edges) unlink(e.first, e.second);

    Orbit new_i{r1, symmetric_orbit(n_, s_, r1)};
    Orbit new_j{r2, symmetric_orbit(n_, s_, r2)};
    std::vector<Edge> added;
    bool ok = true;
    for (const Orbit* o : {&new_i, &new_j}) {
      for (const Edge& e : o->edges) {
        if (has_edge(e.first, e.second) || deg_[e.first] >= k_ || deg_[e.second] >= k_) {
          ok = false;
          break;
        }
        link(e.first, e.second);
        added.push_back(e);
      }
      if (!ok) break;
    }
    if (ok)
      for (int v = 0; v < n_ && ok; ++v) ok = deg_[v] == k_;
    if (!ok) {
      for (const Edge& e : added) unlink(e.first, e.second);
      for (const Edge& e : old_i.edges) link(e.first, e.second);
      for (const Edge& e : old_j.edges) link(e.first, e.second);
      return false;
    }
    orbits_[i] = std::move(new_i);
    orbits_[j] = std::move(new_j);
    return true;
  }

  void restore_swap(int i, int j, Orbit old_i, Orbit old_j) {
    for (const Edge& e : orbits_[i].edges) unlink(e.first, e.second);
    for (const Edge& e : orbits_[j].edges) unlink(e.first, e.second);
    for (const Edge& e : old_i.edges) link(e.first, e.second);
    for (const Edge& e : old_j.edges) link(e.first, e.second);
    orbits_[i] = std::move(old_i);
    orbits_[j] = std::move(old_j);
  }

  const Orbit& orbit(int i) const { return orbits_[i]; }
  const std::vector<Orbit>& orbits() const { return orbits_; }
  void set_orbits(const std::vector<Orbit>& orbits) {
    clear_chords();
    for (const auto& o : orbits) {
      for (const Edge& e : o.edges) link(e.first, e.second);
      orbits_.push_back(o);
    }
  }

  // Ordered-pair distance sum by BFS from every source. The ring keeps the
  // graph connected, so every vertex is always reached.
  long long distance_sum() const {
    long long sum = 0;
    std::vector<int> dist(n_), queue(n_);
    for (int src = 0; src < n_; ++src) {
      std::fill(dist.begin(), dist.end(), -1);
      dist[src] = 0;
      queue[0] = src;
      int head = 0, tail = 1;
      while (head < tail) {
        int u = queue[head++];
        sum += dist[u];
        for (int w : adj_[u])
          if (dist[w] < 0) {
            dist[w] = dist[u] + 1;
            queue[tail++] = w;
          }
      }
    }
    return sum;
  }

  std::vector<Edge> all_edges() const {
    std::vector<Edge> edges;
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) edges.emplace_back(u, v);
    return edges;
  }

 private:
  void link(int u, int v) {
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++deg_[u];
    ++deg_[v];
  }

  void unlink(int u, int v) {
    adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    --deg_[u];
    --deg_[v];
  }

  void clear_chords() {
    for (const auto& o : orbits_)
      for (const Edge& e : o.edges) unlink(e.first, e.second);
    orbits_.clear();
  }

  bool try_fill(Rng& rng) {
    int fail_streak = 0;
    while (true) {
      std::vector<int> deficient;
      for (int v = 0; v < n_; ++v)
        if (deg_[v] < k_) deficient.push_back(v);
      if (deficient.empty()) return true;
      if (deficient.size() < 2 || fail_streak > 200) return false;
      int u = deficient[rng.below_int(static_cast<int>(deficient.size()))];
      int v = deficient[rng.below_int(static_cast<int>(deficient.size()))];
      if (u == v || has_edge(u, v)) {
        ++fail_streak;
        continue;
      }
      Edge rep{std::min(u, v), std::max(u, v)};
      Orbit o{rep, symmetric_orbit(n_, s_, rep)};
      std::vector<Edge> added;
      bool ok = true;
      for (const Edge& e : o.edges) {
        if (has_edge(e.first, e.second) || deg_[e.first] >= k_ || deg_[e.second] >= k_) {
          ok = false;
          break;
        }
        link(e.first, e.second);
        added.push_back(e);
      }
      if (!ok) {
        for (const Edge& e : added) unlink(e.first, e.second);
        ++fail_streak;
        continue;
      }
      orbits_.push_back(std::move(o));
      fail_streak = 0;
    }
  }

  int n_, k_, s_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> deg_;
  std::vector<Orbit> orbits_;
};

void validate_config(const SAConfig& c) {
  if (c.n < 4 || c.k < 3)
    throw Error(errc::bad_params, "search needs n >= 4 and k >= 3 (k=2 admits only the ring)");
  if ((static_cast<long long>(c.n) * c.k) % 2 != 0)
    throw Error(errc::bad_params, "n*k must be even");
  if (c.k >= c.n) throw Error(errc::bad_params, "need k < n");
  if (!(c.t_start >= c.t_end) || !(c.t_end > 0.0))
    throw Error(errc::bad_params, "need t_start >= t_end > 0");
  if (c.n_iter < 1) throw Error(errc::bad_params, "need n_iter >= 1");
  if (c.symmetry < 1 || c.n % c.symmetry != 0)
    throw Error(errc::bad_params, "symmetry order must divide n");
}

void check_state_valid(const AnnealState& st, int n, int k) {
  auto g = build_graph(n, k, st.all_edges(), true);
  (void)g;
}

}  // namespace

std::optional<RegularGraph> edge_swap_candidate(const RegularGraph& g, Rng& rng) {
  if (!g.ring) throw Error(errc::bad_params, "edge swap requires an embedded ring");
  std::vector<Edge> chords;
  for (const Edge& e : g.edges)
    if (!g.is_ring_edge(e.first, e.second)) chords.push_back(e);
  if (chords.size() < 2)
    throw Error(errc::bad_params, "need at least two non-ring edges to swap");

  int i = rng.below_int(static_cast<int>(chords.size()));
  int j = rng.below_int(static_cast<int>(chords.size() - 1));
  if (j >= i) ++j;
  auto [a, b] = chords[i];
  auto [c, d] = chords[j];
  if (a == c || a == d || b == c || b == d) return std::nullopt;
  bool cross = rng.coin();
  Edge r1 = cross ? Edge{std::min(a, d), std::max(a, d)} : Edge{std::min(a, c), std::max(a, c)};
  Edge r2 = cross ? Edge{std::min(b, c), std::max(b, c)} : Edge{std::min(b, d), std::max(b, d)};
  if (g.has_edge(r1.first, r1.second) || g.has_edge(r2.first, r2.second)) return std::nullopt;

  std::vector<Edge> edges;
  edges.reserve(g.edges.size());
  for (const Edge& e : g.edges)
    if (e != chords[i] && e != chords[j]) edges.push_back(e);
  edges.push_back(r1);
  edges.push_back(r2);
  return build_graph(g.n, g.k, std::move(edges), true, g.name);
}

SearchResult sa_search(const SAConfig& config) {
  validate_config(config);
  const int n = config.n;
  const long long pair_denominator = static_cast<long long>(n) * (n - 1);
  const Rational bound = mpl_lower_bound(n, config.k);
  // MPL equals the bound exactly when the ordered distance sum reaches this.
  const long long bound_sum = bound.num * (pair_denominator / bound.den);

  Rng rng(config.seed);
  AnnealState state(n, config.k, config.symmetry);
  state.randomize(rng, 10000);

  long long current_sum = state.distance_sum();
  long long best_sum = current_sum;
  auto best_orbits = state.orbits();

  SearchResult result;
  const double gamma = cooling_rate(config.t_start, config.t_end, config.n_iter);
  double temperature = config.t_start;
  const double mpl_scale = 1.0 / static_cast<double>(pair_denominator);

  long long iter = 0;
  for (; iter < config.n_iter; ++iter) {
    if (temperature < config.t_end) break;
    if (config.stop_at_bound && best_sum <= bound_sum) break;

    // Generate a structurally valid rewiring; bounded resampling keeps the
    // iteration count meaningful even when most rewirings collide.
    bool applied = false;
    int oi = 0, oj = 0;
    AnnealState::Orbit saved_i, saved_j;
    for (int tries = 0; tries < 64 && !applied; ++tries) {
      int m = state.chord_orbits();
      if (m < 2) break;
      oi = rng.below_int(m);
      oj = rng.below_int(m - 1);
      if (oj >= oi) ++oj;
      bool cross = rng.coin();
      saved_i = state.orbit(oi);
      saved_j = state.orbit(oj);
      applied = state.try_swap(oi, oj, cross);
    }
    if (!applied) {
      temperature *= gamma;
      continue;
    }

    long long new_sum = state.distance_sum();
    long long delta = new_sum - current_sum;
    bool accept = delta < 0;
    if (!accept) {
      double delta_mpl = static_cast<double>(delta) * mpl_scale;
      accept = rng.unit() < std::exp(-delta_mpl / temperature);
    }
    if (accept) {
      current_sum = new_sum;
      ++result.accept_count;
      if (delta > 0) ++result.uphill_accepts;
      if (current_sum < best_sum) {
        best_sum = current_sum;
        best_orbits = state.orbits();
      }
    } else {
      state.restore_swap(oi, oj, std::move(saved_i), std::move(saved_j));
    }
    if (config.validate_every_step) check_state_valid(state, n, config.k);

    if (config.trace_stride > 0 && iter % config.trace_stride == 0)
      result.trace.push_back({iter, temperature,
                              static_cast<double>(current_sum) * mpl_scale,
                              static_cast<double>(best_sum) * mpl_scale});
    temperature *= gamma;
  }

  state.set_orbits(best_orbits);
  std::string name = "(" + std::to_string(n) + "," + std::to_string(config.k) + ")-Optimized";
  result.best = build_graph(n, config.k, state.all_edges(), true, name);
  result.best_mpl = Rational(best_sum, pair_denominator);
  result.bound = bound;
  result.iterations_used = iter;
  return result;
}

SearchResult sa_search_multi(const SAConfig& config, int chains, int jobs) {
  if (chains < 1) chains = 1;
  if (jobs < 1) jobs = 1;
  std::vector<SearchResult> results(chains);
  for (int base = 0; base < chains; base += jobs) {
    int batch = std::min(jobs, chains - base);
    std::vector<std::future<SearchResult>> futures;
    futures.reserve(batch);
    for (int i = 0; i < batch; ++i) {
      SAConfig c = config;
      c.seed = config.seed + static_cast<std::uint64_t>(base + i);
      futures.push_back(std::async(std::launch::async, [c] { return sa_search(c); }));
    }
    for (int i = 0; i < batch; ++i) results[base + i] = futures[i].get();
  }
  // Deterministic merge: lowest MPL, then lowest 1-D cable length, then
  // lowest chain index.
  int best = 0;
  long long best_cable = compute_metrics(results[0].best).cable_1d;
  for (int i = 1; i < chains; ++i) {
    long long cable = compute_metrics(results[i].best).cable_1d;
    if (results[i].best_mpl < results[best].best_mpl ||
        (results[i].best_mpl == results[best].best_mpl && cable < best_cable)) {
      best = i;
      best_cable = cable;
    }
  }
  SearchResult merged = std::move(results[best]);
  for (int i = 0; i < chains; ++i) {
    if (i == best) continue;
    merged.iterations_used += results[i].iterations_used;
    merged.accept_count += results[i].accept_count;
    merged.uphill_accepts += results[i].uphill_accepts;
  }
  return merged;
}

namespace {

// Backtracking enumerator: complete the lowest deficient vertex with every
// feasible partner subset. Fixing N(0) = {1..k} selects one representative
// per relabeling of vertex 0's neighborhood and loses no isomorphism class.
class TinyEnum {
 public:
  TinyEnum(int n, int k, std::optional<int> girth_min)
      : n_(n), k_(k), girth_min_(girth_min), adj_(n), deg_(n, 0) {}

  void run() {
    for (int w = 1; w <= k_; ++w) add(0, w);
    recurse();
  }

  long long inspected = 0;
  long long best_sum = std::numeric_limits<long long>::max();
  std::vector<Edge> best_edges;

 private:
  void add(int u, int v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++deg_[u];
    ++deg_[v];
  }
  void remove(int u, int v) {
    adj_[u].pop_back();
    adj_[v].pop_back();
    --deg_[u];
    --deg_[v];
  }
  bool adjacent(int u, int v) const {
    return std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end();
  }

  void recurse() {
    int u = -1;
    for (int v = 0; v < n_; ++v)
      if (deg_[v] < k_) {
        u = v;
        break;
      }
    if (u < 0) {
      complete();
      return;
    }
    std::vector<int> candidates;
    for (int w = u + 1; w < n_; ++w)
      if (deg_[w] < k_ && !adjacent(u, w)) candidates.push_back(w);
    choose(u, k_ - deg_[u], 0, candidates);
  }

  void choose(int u, int need, size_t start, const std::vector<int>& candidates) {
    if (need == 0) {
      recurse();
      return;
    }
    if (candidates.size() < start + need) return;
    for (size_t i = start; i + need <= candidates.size(); ++i) {
      add(u, candidates[i]);
      choose(u, need - 1, i + 1, candidates);
      remove(u, candidates[i]);
    }
  }

  void complete() {
    ++inspected;
    long long sum = 0;
    std::vector<int> dist(n_), queue(n_);
    for (int src = 0; src < n_; ++src) {
      std::fill(dist.begin(), dist.end(), -1);
      dist[src] = 0;
      queue[0] = src;
      int head = 0, tail = 1;
      while (head < tail) {
        int x = queue[head++];
        sum += dist[x];
        for (int w : adj_[x])
          if (dist[w] < 0) {
            dist[w] = dist[x] + 1;
            queue[tail++] = w;
          }
      }
      if (src == 0 && tail != n_) return;  // disconnected
    }
    if (sum >= best_sum) return;
    if (girth_min_) {
      std::vector<Edge> edges;
      for (int v = 0; v < n_; ++v)
        for (int w : adj_[v])
          if (v < w) edges.emplace_back(v, w);
      auto g = build_graph(n_, k_, std::move(edges), false);
      if (compute_metrics(g).girth < *girth_min_) return;
    }
    best_sum = sum;
    best_edges.clear();
    for (int v = 0; v < n_; ++v)
      for (int w : adj_[v])
        if (v < w) best_edges.emplace_back(v, w);
  }

  int n_, k_;
  std::optional<int> girth_min_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> deg_;
};

}  // namespace

std::optional<SearchResult> exhaustive_tiny(int n, int k, std::optional<int> girth_min) {
  if (k < 3 || k > 4) throw Error(errc::too_large, "exhaustive search supports k in {3,4}");
  if ((k == 3 && n > 12) || (k == 4 && n > 10))
    throw Error(errc::too_large, "exhaustive search guarded to n <= 12 (k=3) / n <= 10 (k=4)");
  if (n <= k || (static_cast<long long>(n) * k) % 2 != 0)
    throw Error(errc::bad_params, "need n > k and n*k even");

  TinyEnum e(n, k, girth_min);
  e.run();
  if (e.best_edges.empty()) return std::nullopt;

  SearchResult result;
  std::string name = "(" + std::to_string(n) + "," + std::to_string(k) + ")-Exhaustive";
  result.best = build_graph(n, k, e.best_edges, false, name);
  result.best_mpl = Rational(e.best_sum, static_cast<long long>(n) * (n - 1));
  result.bound = mpl_lower_bound(n, k);
  result.inspected = e.inspected;
  return result;
}

}  // namespace topoforge
