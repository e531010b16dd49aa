#include <doctest.h>

#include "topoforge/error.hpp"
#include "topoforge/generators.hpp"
#include "topoforge/partition.hpp"

using namespace topoforge;

TEST_CASE("exact bisection matches table values") {
  CHECK(bisection_exact(generate("ring:16")).cut == 2);
  CHECK(bisection_exact(generate("wagner:16")).cut == 4);
  CHECK(bisection_exact(generate("hypercube:4")).cut == 8);
  CHECK(bisection_exact(generate("torus:4x4")).cut == 8);
  CHECK(bisection_exact(generate("ring:6")).cut == 2);
  CHECK(bisection_exact(generate("dragonfly:4,1")).cut == 8);
  CHECK(bisection_exact(generate("dragonfly:5,1")).cut == 9);
}

TEST_CASE("exact bisection of K4 cuts all four cross edges") {
  RegularGraph k4 = build_graph(4, 3, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, false);
  PartitionResult r = bisection_exact(k4);
  CHECK(r.cut == 4);
  CHECK(r.exact);
  CHECK(r.side_a.size() == 2);
}

TEST_CASE("reported side always reproduces the reported cut") {
  for (const char* s : {"ring:16", "torus:4x8", "chvatal", "dragonfly:4,1"}) {
    RegularGraph g = generate(s);
    PartitionResult e = g.n <= 32 ? bisection_exact(g) : bisection_heuristic(g, 16, 3);
    CHECK(static_cast<int>(e.side_a.size()) == g.n / 2);
    CHECK(cut_of(g, e.side_a) == e.cut);
  }
}

TEST_CASE("heuristic equals exact on every N<=16 roster topology") {
  for (const char* s : {"ring:16", "wagner:16", "torus:4x4", "hypercube:4", "bidiakis:12",
                        "chvatal", "ring:8"}) {
    RegularGraph g = generate(s);
    PartitionResult ex = bisection_exact(g);
    PartitionResult h = bisection_heuristic(g, 32, 5);
    CHECK(h.cut == ex.cut);
    CHECK_FALSE(h.exact);
  }
}

TEST_CASE("heuristic is an upper bound on the optimum") {
  for (const char* s : {"torus:4x8", "wagner:32"}) {
    RegularGraph g = generate(s);
    CHECK(bisection_heuristic(g, 8, 11).cut >= bisection_exact(g).cut);
  }
}

TEST_CASE("heuristic finds the optimal ring cuts up to N=256") {
  for (int n : {32, 64, 128, 256})
    CHECK(bisection_heuristic(generate("ring:" + std::to_string(n)), 64, 1).cut == 2);
}

TEST_CASE("heuristic reproduces the 16x16 torus bisection") {
  CHECK(bisection_heuristic(generate("torus:16x16"), 64, 1).cut == 32);
}

TEST_CASE("heuristic is deterministic for a fixed seed, any job count") {
  RegularGraph g = generate("torus:4x8");
  PartitionResult a = bisection_heuristic(g, 16, 9);
  PartitionResult b = bisection_heuristic(g, 16, 9);
  PartitionResult c = bisection_heuristic(g, 16, 9, 4);
  CHECK(a.cut == b.cut);
  CHECK(a.side_a == b.side_a);
  CHECK(a.cut == c.cut);
  CHECK(a.side_a == c.side_a);
}

TEST_CASE("exact bisection is guarded") {
  CHECK_THROWS_AS(bisection_exact(generate("ring:64")), Error);
  try {
    bisection_exact(generate("ring:64"));
  } catch (const Error& e) {
    CHECK(e.code() == errc::too_large);
  }
}
