#include <doctest.h>

#include "topoforge/error.hpp"
#include "topoforge/generators.hpp"
#include "topoforge/io.hpp"

using namespace topoforge;

TEST_CASE("edge list round-trip preserves the graph") {
  for (const char* spec : {"ring:8", "wagner:16", "dragonfly:4,1"}) {
    RegularGraph g = generate(spec);
    RegularGraph back = parse_edge_list(to_edge_list(g), g.name);
    CHECK(back.n == g.n);
    CHECK(back.k == g.k);
    CHECK(back.ring == g.ring);
    CHECK(back.edges == g.edges);
  }
}

TEST_CASE("edge list format is the documented text layout") {
  RegularGraph ring4 = generate("ring:4");
  CHECK(to_edge_list(ring4) == "4 2 1\n0 1\n0 3\n1 2\n2 3\n");
}

TEST_CASE("json round-trip preserves the graph and its name") {
  RegularGraph g = generate("torus:4x4");
  RegularGraph back = parse_json(to_json(g));
  CHECK(back.name == g.name);
  CHECK(back.edges == g.edges);
  CHECK(back.ring == g.ring);
}

TEST_CASE("dot export marks ring edges bold") {
  std::string dot = to_dot(generate("wagner:8"));
  CHECK(dot.find("0 -- 1 [style=bold]") != std::string::npos);
  CHECK(dot.find("0 -- 4;") != std::string::npos);  // chord, not bold
}

TEST_CASE("parse errors carry the parse_error code") {
  try {
    parse_edge_list("not a graph");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse_error);
  }
  try {
    parse_json("{\"n\": 4}");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse_error);
  }
}
