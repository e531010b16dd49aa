#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "topoforge/error.hpp"
#include "topoforge/generators.hpp"
#include "topoforge/graph.hpp"
#include "topoforge/rng.hpp"

using namespace topoforge;

namespace {

// Independent oracle for torus MPL: distances decompose per coordinate, so
// the ordered-pair total is sum_c (prod_{j!=c} n_j^2) * ring_total(n_c).
long long ring_dist_total(int n) {
  long long t = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t += std::min(std::abs(a - b), n - std::abs(a - b));
  return t;
}

Rational torus_mpl_oracle(const std::vector<int>& dims) {
  long long n = 1;
  for (int d : dims) n *= d;
  long long total = 0;
  for (size_t c = 0; c < dims.size(); ++c) {
    long long others = 1;
    for (size_t j = 0; j < dims.size(); ++j)
      if (j != c) others *= static_cast<long long>(dims[j]) * dims[j];
    total += others * ring_dist_total(dims[c]);
  }
  return Rational(total, n * (n - 1));
}

}  // namespace

TEST_CASE("build_graph accepts the smallest ring and K4") {
  RegularGraph ring4 = build_graph(4, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, true);
  CHECK(ring4.n == 4);
  CHECK(ring4.has_edge(3, 0));

  RegularGraph k4 = build_graph(4, 3, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, false);
  CHECK(k4.k == 3);
}

TEST_CASE("build_graph rejects invalid inputs") {
  CHECK_THROWS_WITH_AS(build_graph(4, 2, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}, false),
                       doctest::Contains("duplicate"), Error);
  CHECK_THROWS_AS(build_graph(4, 2, {{0, 0}, {1, 2}, {2, 3}, {1, 3}}, false), Error);
  // two disjoint triangles
  try {
    build_graph(6, 2, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}, false);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::disconnected);
  }
  // degree violation
  try {
    build_graph(4, 3, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, false);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_regular);
  }
  // ring flag without the cycle edges
  try {
    build_graph(4, 2, {{0, 2}, {2, 1}, {1, 3}, {3, 0}}, true);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::ring_missing);
  }
  CHECK_THROWS_AS(build_graph(4, 2, {{0, 5}, {1, 2}, {2, 3}, {3, 0}}, false), Error);
}

TEST_CASE("all_pairs_distances on rings and hypercubes") {
  RegularGraph ring16 = generate("ring:16");
  DistanceMatrix dm = all_pairs_distances(ring16);
  CHECK(dm.at(0, 8) == 8);
  for (int i = 0; i < 16; ++i) CHECK(dm.at(i, i) == 0);

  // Hamming-distance oracle for the 4-cube.
  RegularGraph q4 = generate("hypercube:4");
  DistanceMatrix dq = all_pairs_distances(q4);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) CHECK(dq.at(i, j) == __builtin_popcount(i ^ j));
  CHECK(dq.at(0, 15) == 4);
}

TEST_CASE("distance matrix is symmetric and satisfies the triangle inequality") {
  for (const char* spec : {"wagner:16", "torus:4x4", "dragonfly:4,1"}) {
    RegularGraph g = generate(spec);
    DistanceMatrix dm = all_pairs_distances(g);
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) {
        CHECK(dm.at(i, j) == dm.at(j, i));
        if (i != j) CHECK(dm.at(i, j) >= 1);
      }
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
      int i = rng.below_int(g.n), j = rng.below_int(g.n), m = rng.below_int(g.n);
      CHECK(dm.at(i, j) <= dm.at(i, m) + dm.at(m, j));
    }
  }
}

TEST_CASE("ring metrics match the published table values") {
  GraphMetrics m16 = compute_metrics(generate("ring:16"));
  CHECK(m16.diameter == 8);
  CHECK(m16.mpl.to_fixed(2) == "4.27");
  CHECK(m16.mpl == Rational(64, 15));
  CHECK(m16.girth == 16);
  CHECK(m16.cable_1d == 16);

  GraphMetrics m32 = compute_metrics(generate("ring:32"));
  CHECK(m32.diameter == 16);
  CHECK(m32.mpl.to_fixed(2) == "8.26");
}

TEST_CASE("even ring MPL equals N^2/(4(N-1)) exactly") {
  for (int n : {8, 16, 64, 256}) {
    GraphMetrics m = compute_metrics(generate("ring:" + std::to_string(n)));
    CHECK(m.mpl == Rational(static_cast<long long>(n) * n, 4LL * (n - 1)));
  }
  CHECK(compute_metrics(generate("ring:256")).mpl.to_fixed(2) == "64.25");
}

TEST_CASE("torus metrics agree with the per-coordinate oracle") {
  struct Row {
    std::vector<int> dims;
    int diameter;
    const char* mpl;
  };
  for (const Row& row : {Row{{4, 4}, 4, "2.13"}, Row{{4, 8}, 6, "3.10"}}) {
    std::string spec = "torus:";
    for (size_t i = 0; i < row.dims.size(); ++i)
      spec += (i ? "x" : "") + std::to_string(row.dims[i]);
    GraphMetrics m = compute_metrics(generate(spec));
    CHECK(m.diameter == row.diameter);
    CHECK(m.mpl.to_fixed(2) == row.mpl);
    CHECK(m.mpl == torus_mpl_oracle(row.dims));
  }
  // 16x16 from the larger table, exact against the oracle
  GraphMetrics m = compute_metrics(generate("torus:16x16"));
  CHECK(m.diameter == 16);
  CHECK(m.mpl.to_fixed(2) == "8.03");
  CHECK(m.mpl == torus_mpl_oracle({16, 16}));
}

TEST_CASE("girth of canonical families") {
  CHECK(compute_metrics(generate("ring:9")).girth == 9);
  CHECK(compute_metrics(generate("wagner:8")).girth == 4);
  CHECK(compute_metrics(generate("hypercube:3")).girth == 4);
  RegularGraph k4 = build_graph(4, 3, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, false);
  CHECK(compute_metrics(k4).girth == 3);
}

TEST_CASE("metrics are invariant under vertex relabeling") {
  Rng rng(42);
  for (const char* spec : {"wagner:16", "torus:4x4", "chvatal"}) {
    RegularGraph g = generate(spec);
    GraphMetrics base = compute_metrics(g);
    for (int t = 0; t < 8; ++t) {
      std::vector<int> perm(g.n);
      std::iota(perm.begin(), perm.end(), 0);
      for (int i = g.n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below_int(i + 1)]);
      GraphMetrics m = compute_metrics(relabel(g, perm));
      CHECK(m.diameter == base.diameter);
      CHECK(m.mpl == base.mpl);
      CHECK(m.girth == base.girth);
    }
  }
}

TEST_CASE("rational fixed-point rendering rounds half up") {
  CHECK(Rational(64, 15).to_fixed(2) == "4.27");
  CHECK(Rational(1, 8).to_fixed(2) == "0.13");
  CHECK(Rational(5, 2).to_fixed(0) == "3");
  CHECK(Rational(1, 4).to_fixed(1) == "0.3");
  CHECK(Rational(-1, 8).to_fixed(2) == "-0.13");
  CHECK(Rational(0, 1).to_fixed(2) == "0.00");
  CHECK(Rational(7, 1).to_fixed(3) == "7.000");
  CHECK(Rational(256, 60) == Rational(64, 15));
}
