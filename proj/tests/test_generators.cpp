#include <doctest.h>

#include <algorithm>
#include <set>

#include "topoforge/error.hpp"
#include "topoforge/generators.hpp"
#include "topoforge/graph.hpp"

using namespace topoforge;

namespace {

// Isomorphism-invariant signature: multiset of per-vertex sorted distance
// rows, sorted.
std::vector<std::vector<int>> distance_signature(const RegularGraph& g) {
  DistanceMatrix dm = all_pairs_distances(g);
  std::vector<std::vector<int>> rows(g.n);
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) rows[i].push_back(dm.at(i, j));
    std::sort(rows[i].begin(), rows[i].end());
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

bool color_rec(const RegularGraph& g, std::vector<int>& color, int v) {
  if (v == g.n) return true;
  for (int c = 0; c < 3; ++c) {
    bool ok = true;
    for (int w : g.adj[v])
      if (color[w] == c) {
        ok = false;
        break;
      }
    if (ok) {
      color[v] = c;
      if (color_rec(g, color, v + 1)) return true;
      color[v] = -1;
    }
  }
  return false;
}

bool three_colorable(const RegularGraph& g) {
  std::vector<int> color(g.n, -1);
  color[0] = 0;  // fix one color by symmetry
  return color_rec(g, color, 1);
}

bool triangle_free(const RegularGraph& g) {
  for (const auto& [u, v] : g.edges)
    for (int w : g.adj[u])
      if (w != v && g.has_edge(w, v)) return false;
  return true;
}

}  // namespace

TEST_CASE("wagner graphs match table values") {
  GraphMetrics m8 = compute_metrics(generate("wagner:8"));
  CHECK(m8.diameter == 2);
  CHECK(m8.mpl == Rational(11, 7));

  GraphMetrics m16 = compute_metrics(generate("wagner:16"));
  CHECK(m16.diameter == 4);
  CHECK(m16.mpl.to_fixed(2) == "2.60");
  CHECK(m16.girth == 4);

  GraphMetrics m32 = compute_metrics(generate("wagner:32"));
  CHECK(m32.diameter == 8);
  CHECK(m32.mpl.to_fixed(2) == "4.61");
}

TEST_CASE("wagner girth is 4 from n=6 on") {
  for (int n : {6, 8, 10, 12, 20})
    CHECK(compute_metrics(generate("wagner:" + std::to_string(n))).girth == 4);
}

TEST_CASE("bidiakis:12 is the Bidiakis cube") {
  RegularGraph g = generate("bidiakis:12");
  CHECK(g.k == 3);
  GraphMetrics m = compute_metrics(g);
  CHECK(m.girth == 4);
  CHECK(m.diameter == 3);

  // Test-local LCF expansion [6,4,-4]^4 around a 12-cycle.
  std::vector<Edge> edges;
  for (int i = 0; i < 12; ++i) edges.emplace_back(std::min(i, (i + 1) % 12), std::max(i, (i + 1) % 12));
  const int lcf[3] = {6, 4, -4};
  std::set<Edge> chords;
  for (int i = 0; i < 12; ++i) {
    int t = ((i + lcf[i % 3]) % 12 + 12) % 12;
    chords.insert({std::min(i, t), std::max(i, t)});
  }
  for (const Edge& e : chords) edges.push_back(e);
  RegularGraph reference = build_graph(12, 3, edges, true, "bidiakis-cube");
  CHECK(distance_signature(g) == distance_signature(reference));
}

TEST_CASE("chvatal graph invariants") {
  RegularGraph g = generate("chvatal");
  CHECK(g.n == 12);
  CHECK(g.k == 4);
  GraphMetrics m = compute_metrics(g);
  CHECK(m.diameter == 2);
  CHECK(m.girth == 4);
  CHECK(triangle_free(g));
  // Chromatic number 4: the defining property of the construction.
  CHECK_FALSE(three_colorable(g));
}

TEST_CASE("torus and hypercube generators") {
  GraphMetrics t44 = compute_metrics(generate("torus:4x4"));
  CHECK(t44.diameter == 4);
  CHECK(t44.mpl.to_fixed(2) == "2.13");

  // 4x4 torus is the 4-cube.
  GraphMetrics q4 = compute_metrics(generate("hypercube:4"));
  CHECK(q4.mpl == t44.mpl);
  CHECK(q4.diameter == t44.diameter);

  CHECK_THROWS_AS(generate("torus:2x8"), Error);
}

TEST_CASE("dragonfly sizes, degree and group structure") {
  RegularGraph d41 = generate("dragonfly:4,1");
  CHECK(d41.n == 20);
  CHECK(d41.k == 4);
  CHECK(compute_metrics(d41).diameter == 3);

  // Quotient over groups is the complete graph: exactly one global link per
  // group pair, full mesh inside each group.
  int a = 4, groups = 5;
  std::set<std::pair<int, int>> group_pairs;
  for (const auto& [u, v] : d41.edges) {
    int gu = u / a, gv = v / a;
    if (gu != gv) {
      CHECK(group_pairs.insert({std::min(gu, gv), std::max(gu, gv)}).second);
    }
  }
  CHECK(static_cast<int>(group_pairs.size()) == groups * (groups - 1) / 2);

  RegularGraph d75 = generate("dragonfly:7,5");
  CHECK(d75.n == 252);
  CHECK(d75.k == 11);
  RegularGraph d84 = generate("dragonfly:8,4");
  CHECK(d84.n == 264);
  CHECK(d84.k == 11);
}

TEST_CASE("dragonfly mean path lengths under the palmtree arrangement") {
  struct Row {
    const char* spec;
    const char* mpl;
  };
  for (const Row& row : {Row{"dragonfly:4,1", "2.26"}, Row{"dragonfly:4,2", "2.34"},
                         Row{"dragonfly:5,1", "2.38"}}) {
    GraphMetrics m = compute_metrics(generate(row.spec));
    CHECK(m.diameter == 3);
    CHECK(m.mpl.to_fixed(2) == row.mpl);
  }
}

TEST_CASE("dragonfly_params inverts the size/degree relations") {
  CHECK(dragonfly_params(20, 4) == std::make_pair(4, 1));
  CHECK(dragonfly_params(36, 5) == std::make_pair(4, 2));
  // both (9,3) and (7,5) give N=252 at degree 11; the largest a wins
  CHECK(dragonfly_params(252, 11) == std::make_pair(9, 3));
  CHECK(dragonfly_params(264, 11) == std::make_pair(8, 4));
  CHECK(!dragonfly_params(16, 3).has_value());
}

TEST_CASE("generation is deterministic") {
  for (const char* spec : {"ring:16", "bidiakis:12", "dragonfly:4,2", "circulant:16:1,5"}) {
    RegularGraph a = generate(spec);
    RegularGraph b = generate(spec);
    CHECK(a.edges == b.edges);
    CHECK(a.name == b.name);
  }
}

TEST_CASE("circulant construction") {
  RegularGraph c = generate("circulant:16:1,8");
  RegularGraph w = generate("wagner:16");
  CHECK(c.edges == w.edges);  // C16(1,8) is the Moebius ladder
  CHECK(c.k == 3);
  CHECK(c.ring);
  CHECK_FALSE(generate("circulant:12:2,3").ring);  // no unit offset, no embedded ring
  CHECK_THROWS_AS(generate("circulant:12:0,3"), Error);
  CHECK_THROWS_AS(generate("circulant:12:3,3"), Error);
  CHECK_THROWS_AS(generate("circulant:12:7"), Error);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(generate("wagner:7"), Error);
  CHECK_THROWS_AS(generate("bidiakis:16"), Error);
  CHECK_THROWS_AS(generate("ring:2"), Error);
  CHECK_THROWS_AS(generate("hypercube:0"), Error);
  CHECK_THROWS_AS(generate("dragonfly:1,1"), Error);
}

TEST_CASE("spec grammar round-trips") {
  for (const char* s : {"ring:16", "wagner:8", "bidiakis:12", "chvatal", "circulant:16:1,5",
                        "torus:4x8", "hypercube:4", "dragonfly:4,2"})
    CHECK(spec_string(parse_spec(s)) == s);
  CHECK_THROWS_AS(parse_spec("moebius:8"), Error);
  CHECK_THROWS_AS(parse_spec("ring"), Error);
  CHECK_THROWS_AS(parse_spec("torus:4xx8"), Error);
}

TEST_CASE("every generated topology is a valid regular graph") {
  for (const char* s : {"ring:9", "wagner:10", "bidiakis:18", "chvatal", "circulant:10:2,5",
                        "torus:3x5", "hypercube:5", "dragonfly:3,2"}) {
    RegularGraph g = generate(s);
    CHECK(static_cast<long long>(g.edges.size()) == static_cast<long long>(g.n) * g.k / 2);
    for (int v = 0; v < g.n; ++v) CHECK(static_cast<int>(g.adj[v].size()) == g.k);
  }
}
