#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qlayout/graph.hpp"
#include "qlayout/json_io.hpp"
#include "qlayout/layout.hpp"
#include "qlayout/structural.hpp"
#include "qlayout/vc_kernel.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace qlayout;

TEST_CASE("nesting is strict enclosure over four distinct endpoints") {
  Graph g = testgen::path(4);  // vertices 0..3, order is the identity
  std::vector<Vertex> order{0, 1, 2, 3};
  CHECK(edges_nest(order, {0, 3}, {1, 2}));
  CHECK(edges_nest(order, {1, 2}, {0, 3}));  // symmetric
  CHECK_FALSE(edges_nest(order, {0, 2}, {1, 3}));  // crossing
  CHECK_FALSE(edges_nest(order, {0, 2}, {0, 3}));  // shared endpoint
}

TEST_CASE("star edges in one queue validate under any order") {
  Graph g = testgen::star(3);
  testgen::Rng rng(7);
  for (int round = 0; round < 10; ++round) {
    LinearLayout l;
    l.order = testgen::random_order(4, rng);
    l.queues.assign(3, 1);
    l.num_queues = 1;
    CHECK(static_cast<bool>(validate_layout(g, l)));
  }
}

TEST_CASE("a nested same-queue pair is reported with a witness") {
  Graph g(4, {{0, 3}, {1, 2}});
  LinearLayout l;
  l.order = {0, 1, 2, 3};
  l.queues = {1, 1};
  l.num_queues = 1;
  ValidationResult r = validate_layout(g, l);
  CHECK(r.status == ValidationResult::Status::violation);
  CHECK(r.queue == 1);
  // the witness names the actual pair
  bool names_both = (r.first == Edge{0, 3} && r.second == Edge{1, 2}) ||
                    (r.first == Edge{1, 2} && r.second == Edge{0, 3});
  CHECK(names_both);
}

TEST_CASE("structural problems are distinct from violations") {
  Graph g(3, {{0, 1}, {1, 2}});
  LinearLayout l;
  l.order = {0, 1, 1};  // not a permutation
  l.queues = {1, 1};
  l.num_queues = 1;
  CHECK(validate_layout(g, l).status == ValidationResult::Status::structural);

  l.order = {0, 1, 2};
  l.queues = {1};  // missing an edge
  CHECK(validate_layout(g, l).status == ValidationResult::Status::structural);
}

TEST_CASE("cover-first layouts validate") {
  testgen::Rng rng(99);
  for (int round = 0; round < 40; ++round) {
    Graph g = testgen::random_connected_graph(4 + static_cast<int>(rng() % 9), 0.3, rng);
    auto cover = min_vertex_cover(g, g.vertex_count());
    REQUIRE(cover.has_value());
    LinearLayout l = vc::cover_layout(g, *cover);
    CHECK(static_cast<bool>(validate_layout(g, l)));
    CHECK(l.num_queues <= cover->size());
  }
}

TEST_CASE("fully nested edges form a maximum rainbow") {
  Graph g(6, {{0, 5}, {1, 4}, {2, 3}});
  std::vector<Vertex> order{0, 1, 2, 3, 4, 5};
  Rainbow r = max_rainbow(g, order);
  CHECK(r.size() == 3);
  // outermost first, strictly shrinking intervals
  CHECK(r.edges == std::vector<Edge>{{0, 5}, {1, 4}, {2, 3}});
}

TEST_CASE("edgeless graphs have empty rainbows") {
  Graph g(4, {});
  CHECK(max_rainbow(g, {0, 1, 2, 3}).size() == 0);
  CHECK(min_queues_for_order(g, {0, 1, 2, 3}).num_queues == 0);
}

TEST_CASE("complete graph on eight vertices under the identity order") {
  Graph g = testgen::complete(8);
  std::vector<Vertex> order{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(max_rainbow(g, order).size() == 4);
  CHECK(testref::max_rainbow_exhaustive(g, order) == 4);
}

TEST_CASE("three fully nested edges need three queues") {
  Graph g(6, {{0, 5}, {1, 4}, {2, 3}});
  LinearLayout l = min_queues_for_order(g, {0, 1, 2, 3, 4, 5});
  CHECK(l.num_queues == 3);
  CHECK(static_cast<bool>(validate_layout(g, l)));
}

TEST_CASE("stars need one queue under any order") {
  Graph g = testgen::star(5);
  testgen::Rng rng(3);
  for (int round = 0; round < 10; ++round) {
    LinearLayout l = min_queues_for_order(g, testgen::random_order(6, rng));
    CHECK(l.num_queues == 1);
  }
}

TEST_CASE("fixed-order optimum equals the exhaustive rainbow bound") {
  testgen::Rng rng(20240917);
  for (int round = 0; round < 300; ++round) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = testgen::random_graph(n, 0.45, rng);
    auto order = testgen::random_order(n, rng);
    LinearLayout l = min_queues_for_order(g, order);
    CHECK(l.num_queues == testref::max_rainbow_exhaustive(g, order));
    CHECK(l.num_queues == max_rainbow(g, order).size());
    CHECK(static_cast<bool>(validate_layout(g, l)));
  }
}

TEST_CASE("rainbow witness really is a rainbow") {
  testgen::Rng rng(5551);
  for (int round = 0; round < 100; ++round) {
    int n = 4 + static_cast<int>(rng() % 5);
    Graph g = testgen::random_graph(n, 0.5, rng);
    auto order = testgen::random_order(n, rng);
    Rainbow r = max_rainbow(g, order);
    auto pos = testref::positions_ref(n, order);
    for (std::size_t i = 0; i < r.edges.size(); ++i)
      for (std::size_t j = i + 1; j < r.edges.size(); ++j)
        CHECK(testref::nest_ref(pos, r.edges[i], r.edges[j]));
  }
}

TEST_CASE("adding an edge never shrinks the rainbow") {
  testgen::Rng rng(606060);
  for (int round = 0; round < 100; ++round) {
    int n = 5 + static_cast<int>(rng() % 4);
    Graph g = testgen::random_graph(n, 0.3, rng);
    auto order = testgen::random_order(n, rng);
    int before = max_rainbow(g, order).size();

    std::vector<Edge> extended = g.edges();
    bool added = false;
    for (int u = 0; u < n && !added; ++u)
      for (int v = u + 1; v < n && !added; ++v)
        if (!g.has_edge(u, v)) {
          extended.emplace_back(u, v);
          added = true;
        }
    if (!added) continue;
    CHECK(max_rainbow(Graph(n, extended), order).size() >= before);
  }
}

TEST_CASE("layout json round-trips") {
  testgen::Rng rng(140);
  for (int round = 0; round < 20; ++round) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = testgen::random_graph(n, 0.5, rng);
    LinearLayout l = min_queues_for_order(g, testgen::random_order(n, rng));
    LinearLayout back = layout_from_json(g, layout_to_json(g, l));
    CHECK(back.order == l.order);
    CHECK(back.queues == l.queues);
    CHECK(back.num_queues == l.num_queues);
  }
}

TEST_CASE("svg output is deterministic and lists every vertex") {
  Graph g = testgen::cycle(5);
  LinearLayout l = min_queues_for_order(g, {0, 1, 2, 3, 4});
  std::string a = layout_to_svg(g, l);
  std::string b = layout_to_svg(g, l);
  CHECK(a == b);
  std::size_t circles = 0;
  for (std::size_t at = a.find("<circle"); at != std::string::npos;
       at = a.find("<circle", at + 1))
    ++circles;
  CHECK(circles == 5);
}
