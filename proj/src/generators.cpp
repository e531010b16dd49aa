#include "topoforge/generators.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "topoforge/error.hpp"

namespace topoforge {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(errc::bad_params, msg);
}

std::vector<Edge> ring_edges(int n) {
  std::vector<Edge> e;
  e.reserve(n);
  for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return e;
}

RegularGraph make_ring(int n) {
  require(n >= 3, "ring needs n >= 3");
  return build_graph(n, 2, ring_edges(n), true, "(" + std::to_string(n) + ",2)-Ring");
}

// Moebius ladder: even cycle plus antipodal chords.
RegularGraph make_wagner(int n) {
  require(n >= 4 && n % 2 == 0, "wagner needs even n >= 4");
  auto e = ring_edges(n);
  for (int i = 0; i < n / 2; ++i) e.emplace_back(i, i + n / 2);
  return build_graph(n, 3, std::move(e), true, "(" + std::to_string(n) + ",3)-Wagner");
}

// Cycle plus one chord per vertex following the repeating LCF offsets
// [n/2, 4, -4]; the offset pattern is consistent only when n = 0 (mod 6).
// Reproduces the Bidiakis cube at n = 12.
RegularGraph make_bidiakis(int n) {
  require(n >= 6 && n % 6 == 0, "bidiakis needs n = 0 (mod 6), n >= 6");
  const int offsets[3] = {n / 2, 4, -4};
  std::set<Edge> chords;
  for (int j = 0; j < n; ++j) {
    int t = (j + offsets[j % 3]) % n;
    if (t < 0) t += n;
    int u = std::min(j, t), v = std::max(j, t);
    if (v - u == 1 || v - u == n - 1)
      throw Error(errc::overlap_edge, "LCF chord coincides with a ring edge");
    chords.insert({u, v});
  }
  auto e = ring_edges(n);
  e.insert(e.end(), chords.begin(), chords.end());
  return build_graph(n, 3, std::move(e), true, "(" + std::to_string(n) + ",3)-Bidiakis");
}

// The 12-vertex 4-regular Chvatal graph (fixed published edge list,
// 0-indexed). Triangle-free, girth 4, diameter 2.
RegularGraph make_chvatal() {
  static const Edge kEdges[] = {
      {0, 1}, {0, 4}, {0, 6}, {0, 9},  {1, 2},  {1, 5},  {1, 7},  {2, 3},
      {2, 6}, {2, 8}, {3, 4}, {3, 7},  {3, 9},  {4, 5},  {4, 8},  {5, 10},
      {5, 11}, {6, 10}, {6, 11}, {7, 8}, {7, 11}, {8, 10}, {9, 10}, {9, 11}};
  return build_graph(12, 4, {std::begin(kEdges), std::end(kEdges)}, false, "(12,4)-Chvatal");
}

RegularGraph make_circulant(int n, std::vector<int> offsets) {
  require(n >= 3 && !offsets.empty(), "circulant needs n >= 3 and offsets");
  std::sort(offsets.begin(), offsets.end());
  for (size_t i = 0; i < offsets.size(); ++i) {
    require(offsets[i] >= 1 && offsets[i] <= n / 2, "circulant offsets must lie in [1, n/2]");
    require(i == 0 || offsets[i] != offsets[i - 1], "circulant offsets must be distinct");
  }
  std::set<Edge> edges;
  int k = 0;
  for (int o : offsets) k += (2 * o == n) ? 1 : 2;
  for (int i = 0; i < n; ++i)
    for (int o : offsets) {
      int j = (i + o) % n;
      edges.insert({std::min(i, j), std::max(i, j)});
    }
  bool ring = offsets.front() == 1;  // cycle order only embeds a ring with offset 1
  std::ostringstream name;
  name << "(" << n << "," << k << ")-Circulant(";
  for (size_t i = 0; i < offsets.size(); ++i) name << (i ? "," : "") << offsets[i];
  name << ")";
  return build_graph(n, k, {edges.begin(), edges.end()}, ring, name.str());
}

RegularGraph make_torus(const std::vector<int>& dims) {
  require(!dims.empty(), "torus needs at least one dimension");
  long long n = 1;
  for (int d : dims) {
    require(d >= 3, "torus dims must be >= 3 (dim 2 creates parallel edges)");
    n *= d;
  }
  require(n <= 1 << 20, "torus too large");
  int nd = static_cast<int>(dims.size());
  std::vector<long long> stride(nd, 1);
  for (int i = nd - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];
  std::vector<Edge> edges;
  std::vector<int> coord(nd, 0);
  for (long long id = 0; id < n; ++id) {
    for (int i = 0; i < nd; ++i) {
      int up = (coord[i] + 1) % dims[i];
      long long nb = id + static_cast<long long>(up - coord[i]) * stride[i];
      edges.emplace_back(std::min<long long>(id, nb), std::max<long long>(id, nb));
    }
    for (int i = nd - 1; i >= 0; --i) {
      if (++coord[i] < dims[i]) break;
      coord[i] = 0;
    }
  }
  std::ostringstream name;
  name << "(" << n << "," << 2 * nd << ")-Torus(";
  for (int i = 0; i < nd; ++i) name << (i ? "x" : "") << dims[i];
  name << ")";
  bool ring = nd == 1;  // a 1-D torus is exactly the ring
  return build_graph(static_cast<int>(n), 2 * nd, std::move(edges), ring, name.str());
}

RegularGraph make_hypercube(int d) {
  require(d >= 1 && d <= 16, "hypercube needs 1 <= d <= 16");
  int n = 1 << d;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (int w = v ^ (1 << b); w > v) edges.emplace_back(v, w);
  return build_graph(n, d, std::move(edges), false,
                     "(" + std::to_string(n) + "," + std::to_string(d) + ")-Hypercube");
}

// Dragonfly with g = a*h+1 groups of a routers: complete graph inside each
// group, one global link per group pair. Global ports follow the consecutive
// ("palmtree") arrangement: port j of router r in group G reaches group
// G + r*h + j + 1 (mod g), landing on router a-1-r, port h-1-j.
RegularGraph make_dragonfly(int a, int h) {
  require(a >= 2 && h >= 1, "dragonfly needs a >= 2, h >= 1");
  int g = a * h + 1;
  long long n = static_cast<long long>(a) * g;
  require(n <= 1 << 20, "dragonfly too large");
  int k = a - 1 + h;
  std::set<Edge> edges;
  for (int grp = 0; grp < g; ++grp)
    for (int r = 0; r < a; ++r)
      for (int r2 = r + 1; r2 < a; ++r2) edges.insert({grp * a + r, grp * a + r2});
  for (int grp = 0; grp < g; ++grp)
    for (int r = 0; r < a; ++r)
      for (int j = 0; j < h; ++j) {
        int grp2 = (grp + r * h + j + 1) % g;
        int u = grp * a + r, v = grp2 * a + (a - 1 - r);
        edges.insert({std::min(u, v), std::max(u, v)});
      }
  std::ostringstream name;
  name << "(" << n << "," << k << ")-Dragonfly";
  return build_graph(static_cast<int>(n), k, {edges.begin(), edges.end()}, false, name.str());
}

int parse_int(const std::string& s) {
  size_t pos = 0;
  int v;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw Error(errc::parse_error, "expected integer, got '" + s + "'");
  }
  if (pos != s.size()) throw Error(errc::parse_error, "expected integer, got '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TopologySpec parse_spec(const std::string& s) {
  auto parts = split(s, ':');
  const std::string& head = parts[0];
  TopologySpec spec;
  auto arity = [&](size_t want) {
    if (parts.size() != want)
      throw Error(errc::parse_error, "bad topology spec '" + s + "'");
  };
  if (head == "ring") {
    arity(2);
    spec.kind = TopologySpec::Kind::Ring;
    spec.n = parse_int(parts[1]);
  } else if (head == "wagner") {
    arity(2);
    spec.kind = TopologySpec::Kind::Wagner;
    spec.n = parse_int(parts[1]);
  } else if (head == "bidiakis") {
    arity(2);
    spec.kind = TopologySpec::Kind::Bidiakis;
    spec.n = parse_int(parts[1]);
  } else if (head == "chvatal") {
    arity(1);
    spec.kind = TopologySpec::Kind::Chvatal;
  } else if (head == "circulant") {
    arity(3);
    spec.kind = TopologySpec::Kind::Circulant;
    spec.n = parse_int(parts[1]);
    for (const auto& o : split(parts[2], ',')) spec.offsets.push_back(parse_int(o));
  } else if (head == "torus") {
    arity(2);
    spec.kind = TopologySpec::Kind::Torus;
    for (const auto& d : split(parts[1], 'x')) spec.dims.push_back(parse_int(d));
  } else if (head == "hypercube") {
    arity(2);
    spec.kind = TopologySpec::Kind::Hypercube;
    spec.hyper_d = parse_int(parts[1]);
  } else if (head == "dragonfly") {
    arity(2);
    auto ah = split(parts[1], ',');
    if (ah.size() != 2) throw Error(errc::parse_error, "dragonfly spec is dragonfly:a,h");
    spec.kind = TopologySpec::Kind::Dragonfly;
    spec.df_a = parse_int(ah[0]);
    spec.df_h = parse_int(ah[1]);
  } else {
    throw Error(errc::parse_error, "unknown topology '" + head + "'");
  }
  return spec;
}

std::string spec_string(const TopologySpec& spec) {
  using Kind = TopologySpec::Kind;
  std::ostringstream os;
  switch (spec.kind) {
    case Kind::Ring: os << "ring:" << spec.n; break;
    case Kind::Wagner: os << "wagner:" << spec.n; break;
    case Kind::Bidiakis: os << "bidiakis:" << spec.n; break;
    case Kind::Chvatal: os << "chvatal"; break;
    case Kind::Circulant:
      os << "circulant:" << spec.n << ":";
      for (size_t i = 0; i < spec.offsets.size(); ++i) os << (i ? "," : "") << spec.offsets[i];
      break;
    case Kind::Torus:
      os << "torus:";
      for (size_t i = 0; i < spec.dims.size(); ++i) os << (i ? "x" : "") << spec.dims[i];
      break;
    case Kind::Hypercube: os << "hypercube:" << spec.hyper_d; break;
    case Kind::Dragonfly: os << "dragonfly:" << spec.df_a << "," << spec.df_h; break;
  }
  return os.str();
}

RegularGraph generate(const TopologySpec& spec) {
  using Kind = TopologySpec::Kind;
  switch (spec.kind) {
    case Kind::Ring: return make_ring(spec.n);
    case Kind::Wagner: return make_wagner(spec.n);
    case Kind::Bidiakis: return make_bidiakis(spec.n);
    case Kind::Chvatal: return make_chvatal();
    case Kind::Circulant: return make_circulant(spec.n, spec.offsets);
    case Kind::Torus: return make_torus(spec.dims);
    case Kind::Hypercube: return make_hypercube(spec.hyper_d);
    case Kind::Dragonfly: return make_dragonfly(spec.df_a, spec.df_h);
  }
  throw Error(errc::bad_params, "unreachable");
}

std::optional<std::pair<int, int>> dragonfly_params(int n, int k) {
  if (n < 4 || k < 2) return std::nullopt;
  for (int a = k; a >= 2; --a) {  // largest a wins ties
    int h = k - a + 1;
    if (h < 1) continue;
    if (static_cast<long long>(a) * (static_cast<long long>(a) * h + 1) == n)
      return std::make_pair(a, h);
  }
  return std::nullopt;
}

}  // namespace topoforge
