#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qlayout/errors.hpp"
#include "qlayout/graph.hpp"
#include "qlayout/structural.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace qlayout;

TEST_CASE("single vertex has height one") {
  Graph g(1, {});
  auto deco = compute_treedepth(g, 1);
  REQUIRE(deco.has_value());
  CHECK(deco->height == 1);
}

TEST_CASE("complete graphs force a chain") {
  for (int n = 2; n <= 6; ++n) {
    auto deco = compute_treedepth(testgen::complete(n), n);
    REQUIRE(deco.has_value());
    CHECK(deco->height == n);
  }
}

TEST_CASE("seven-vertex path has height three") {
  Graph g = testgen::path(7);
  auto deco = compute_treedepth(g, 7);
  REQUIRE(deco.has_value());
  CHECK(deco->height == 3);
  CHECK(testref::treedepth_brute(g) == 3);
}

TEST_CASE("budget below the height yields nothing") {
  CHECK_FALSE(compute_treedepth(testgen::complete(4), 3).has_value());
  CHECK(compute_treedepth(testgen::complete(4), 4).has_value());
}

TEST_CASE("disconnected input is rejected") {
  Graph g(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(compute_treedepth(g, 4), std::invalid_argument);
}

TEST_CASE("every decomposition satisfies the closure property") {
  testgen::Rng rng(1001);
  for (int round = 0; round < 60; ++round) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = testgen::random_connected_graph(n, 0.3, rng);
    auto deco = compute_treedepth(g, n);
    REQUIRE(deco.has_value());
    CHECK(deco->why_invalid(g).empty());
  }
}

TEST_CASE("exact heights match the all-orders brute force") {
  testgen::Rng rng(2025);
  for (int round = 0; round < 40; ++round) {
    int n = 2 + static_cast<int>(rng() % 6);  // brute force is n! per instance
    Graph g = testgen::random_connected_graph(n, 0.35, rng);
    auto deco = compute_treedepth(g, n);
    REQUIRE(deco.has_value());
    CHECK(deco->height == testref::treedepth_brute(g));
  }
}

TEST_CASE("long path detection is exact on small cases") {
  CHECK(has_long_path(testgen::path(5), 2));        // 4 edges = 2^2
  CHECK_FALSE(has_long_path(testgen::path(4), 2));  // only 3 edges
  CHECK_FALSE(has_long_path(testgen::complete(2), 1));
  CHECK(has_long_path(testgen::cycle(6), 2));
  CHECK_THROWS_AS(has_long_path(testgen::path(3), 7), CapacityError);
}

TEST_CASE("a long path rules out the budget") {
  testgen::Rng rng(31337);
  for (int round = 0; round < 60; ++round) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = testgen::random_connected_graph(n, 0.3, rng);
    for (int k = 1; k <= 3; ++k)
      if (has_long_path(g, k)) CHECK_FALSE(compute_treedepth(g, k).has_value());
  }
}

TEST_CASE("height is at most the cover size plus one") {
  testgen::Rng rng(808);
  for (int round = 0; round < 60; ++round) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = testgen::random_connected_graph(n, 0.3, rng);
    auto deco = compute_treedepth(g, n);
    auto cover = min_vertex_cover(g, n);
    REQUIRE(deco.has_value());
    REQUIRE(cover.has_value());
    CHECK(deco->height <= cover->size() + 1);
  }
}

TEST_CASE("star is covered by its center") {
  auto cover = min_vertex_cover(testgen::star(5), 6);
  REQUIRE(cover.has_value());
  CHECK(cover->vertices == VertexSet{0});
}

TEST_CASE("complete bipartite three-three needs three vertices") {
  Graph g = testgen::complete_bipartite(3, 3);
  auto cover = min_vertex_cover(g, 6);
  REQUIRE(cover.has_value());
  CHECK(cover->size() == 3);
  CHECK(testref::min_cover_brute(g) == 3);
  CHECK(is_vertex_cover(g, cover->vertices));
}

TEST_CASE("four-vertex path needs two vertices") {
  Graph g = testgen::path(4);
  auto cover = min_vertex_cover(g, 4);
  REQUIRE(cover.has_value());
  CHECK(cover->size() == 2);
  CHECK(testref::min_cover_brute(g) == 2);
}

TEST_CASE("cover budget behaves as a cutoff") {
  Graph g = testgen::complete(5);  // needs 4
  CHECK_FALSE(min_vertex_cover(g, 3).has_value());
  auto cover = min_vertex_cover(g, 4);
  REQUIRE(cover.has_value());
  CHECK(cover->size() == 4);
}

TEST_CASE("covers are minimum on random graphs") {
  testgen::Rng rng(90210);
  for (int round = 0; round < 80; ++round) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = testgen::random_graph(n, 0.35, rng);
    auto cover = min_vertex_cover(g, n);
    REQUIRE(cover.has_value());
    CHECK(is_vertex_cover(g, cover->vertices));
    CHECK(cover->size() == testref::min_cover_brute(g));
  }
}
