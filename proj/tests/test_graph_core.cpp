#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "qlayout/errors.hpp"
#include "qlayout/graph.hpp"
#include "support/generators.hpp"

using namespace qlayout;

TEST_CASE("edge list parsing") {
  Graph g = parse_graph("0 1\n1 2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("reversed duplicates collapse to one edge") {
  Graph g = parse_graph("a b\nb a\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.label(0) == "a");
  CHECK(g.label(1) == "b");
}

TEST_CASE("complete graph on eight vertices from a generated edge list") {
  std::ostringstream text;
  for (int u = 0; u < 8; ++u)
    for (int v = u + 1; v < 8; ++v) text << u << ' ' << v << '\n';
  Graph g = parse_graph(text.str());
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 28);
}

TEST_CASE("comments and blank lines are ignored") {
  Graph g = parse_graph("# header\n\n0 1\n   \n# trailing\n1 2\n");
  CHECK(g.edge_count() == 2);
}

TEST_CASE("malformed line reports its number") {
  try {
    parse_graph("0 1\nonly_one_token\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("self-loop is rejected with the label") {
  CHECK_THROWS_WITH_AS(parse_graph("x x\n"), doctest::Contains("x"), ParseError);
}

TEST_CASE("json graph parsing") {
  Graph g = parse_graph(R"({"vertices":["a","b","c","d"],"edges":[["a","b"],["c","b"]]})");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.label(3) == "d");  // isolated vertices survive
  CHECK(g.degree(3) == 0);
}

TEST_CASE("json rejects unknown endpoints and duplicates") {
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[["a","b"]]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a","a"],"edges":[]})"), ParseError);
}

TEST_CASE("components of the empty graph") {
  Graph g = parse_graph("");
  CHECK(g.vertex_count() == 0);
  CHECK(connected_components(g).empty());
}

TEST_CASE("complete graph is one component") {
  auto comps = connected_components(testgen::complete(4));
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == VertexSet{0, 1, 2, 3});
}

TEST_CASE("two disjoint edges are two components") {
  Graph g = parse_graph("a b\nc d\n");
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 2);
  CHECK(comps[1].size() == 2);
}

TEST_CASE("components partition the vertex set") {
  testgen::Rng rng(81234);
  for (int round = 0; round < 50; ++round) {
    Graph g = testgen::random_graph(8, 0.25, rng);
    auto comps = connected_components(g);
    VertexSet seen;
    for (const auto& c : comps) seen = set_union(seen, c);
    VertexSet all(8);
    for (int v = 0; v < 8; ++v) all[v] = v;
    CHECK(seen == all);
    std::size_t total = 0;
    for (const auto& c : comps) total += c.size();
    CHECK(total == 8);
  }
}

TEST_CASE("induced subgraph on two clique vertices is an edge") {
  Subgraph s = induced_subgraph(testgen::complete(4), {1, 3});
  CHECK(s.graph.vertex_count() == 2);
  CHECK(s.graph.edge_count() == 1);
  CHECK(s.to_host == VertexSet{1, 3});
}

TEST_CASE("induced subgraph on the empty set") {
  Subgraph s = induced_subgraph(testgen::complete(4), {});
  CHECK(s.graph.vertex_count() == 0);
  CHECK(s.graph.edge_count() == 0);
}

TEST_CASE("star minus its center is edgeless") {
  Graph g = testgen::star(5);
  Subgraph s = remove_vertices(g, {0});
  CHECK(s.graph.vertex_count() == 5);
  CHECK(s.graph.edge_count() == 0);
}

TEST_CASE("induced subgraph on everything is the identity") {
  testgen::Rng rng(5150);
  Graph g = testgen::random_graph(7, 0.4, rng);
  VertexSet all(7);
  for (int v = 0; v < 7; ++v) all[v] = v;
  Subgraph s = induced_subgraph(g, all);
  CHECK(s.graph.edges() == g.edges());
  CHECK(s.to_host == all);
}

TEST_CASE("induced subgraph rejects unknown ids") {
  CHECK_THROWS_AS(induced_subgraph(testgen::complete(3), {0, 9}), std::invalid_argument);
}

TEST_CASE("serialization round-trips exactly") {
  testgen::Rng rng(424242);
  for (int round = 0; round < 30; ++round) {
    Graph g = testgen::random_graph(6, 0.4, rng);
    Graph from_list = parse_graph(to_edge_list(g));
    // edge-list text loses isolated vertices, so compare via JSON
    Graph from_json = parse_graph(graph_to_json(g));
    CHECK(from_json.vertex_count() == g.vertex_count());
    CHECK(from_json.edges() == g.edges());
    CHECK(from_json.labels() == g.labels());
    CHECK(from_list.edge_count() == g.edge_count());
  }
}

TEST_CASE("labels survive a json round trip") {
  Graph g = parse_graph("left right\nright up\n");
  Graph h = parse_graph(graph_to_json(g));
  CHECK(h.labels() == g.labels());
  CHECK(h.edges() == g.edges());
}
