#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qlayout/errors.hpp"
#include "qlayout/graph.hpp"
#include "qlayout/layout.hpp"
#include "qlayout/oracle.hpp"
#include "support/generators.hpp"

using namespace qlayout;

TEST_CASE("clique queue numbers are half the vertex count") {
  for (int n = 2; n <= 7; ++n) {
    OracleResult r = oracle_queue_number(testgen::complete(n));
    CHECK(r.queue_number == n / 2);
    CHECK(static_cast<bool>(validate_layout(testgen::complete(n), r.layout)));
  }
}

TEST_CASE("trees need a single queue") {
  testgen::Rng rng(11111);
  for (int round = 0; round < 25; ++round) {
    Graph g = testgen::random_tree(2 + static_cast<int>(rng() % 7), rng);
    CHECK(oracle_queue_number(g).queue_number == 1);
  }
}

TEST_CASE("complete bipartite three-three needs two queues") {
  OracleResult r = oracle_queue_number(testgen::complete_bipartite(3, 3));
  CHECK(r.queue_number == 2);
}

TEST_CASE("edgeless graphs need none") {
  Graph g(4, {});
  CHECK(oracle_queue_number(g).queue_number == 0);
}

TEST_CASE("the one-queue decision examples") {
  CHECK(oracle_is_1queue(testgen::cycle(6)).one_queue);
  CHECK_FALSE(oracle_is_1queue(testgen::complete_bipartite(3, 3)).one_queue);
  CHECK(oracle_is_1queue(testgen::path(2)).one_queue);
}

TEST_CASE("decision and queue number agree") {
  testgen::Rng rng(13579);
  for (int round = 0; round < 60; ++round) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = testgen::random_graph(n, 0.4, rng);
    OracleDecision d = oracle_is_1queue(g);
    OracleResult r = oracle_queue_number(g);
    CHECK(d.one_queue == (r.queue_number <= 1));
    if (d.one_queue) {
      REQUIRE(d.layout.has_value());
      CHECK(static_cast<bool>(validate_layout(g, *d.layout)));
    }
  }
}

TEST_CASE("witnesses validate at the reported number") {
  testgen::Rng rng(8642);
  for (int round = 0; round < 40; ++round) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = testgen::random_graph(n, 0.45, rng);
    OracleResult r = oracle_queue_number(g);
    CHECK(r.layout.num_queues == r.queue_number);
    CHECK(static_cast<bool>(validate_layout(g, r.layout)));
  }
}

TEST_CASE("results are invariant under relabeling") {
  testgen::Rng rng(97531);
  for (int round = 0; round < 30; ++round) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = testgen::random_graph(n, 0.4, rng);
    auto perm = testgen::random_order(n, rng);
    std::vector<Edge> relabeled;
    for (const auto& [u, v] : g.edges()) relabeled.push_back(make_edge(perm[u], perm[v]));
    Graph h(n, std::move(relabeled));
    CHECK(oracle_queue_number(g).queue_number == oracle_queue_number(h).queue_number);
  }
}

TEST_CASE("the cap is enforced") {
  CHECK_THROWS_AS(oracle_queue_number(testgen::path(11)), CapacityError);
  CHECK_THROWS_AS(oracle_is_1queue(testgen::path(12), 11), CapacityError);
  CHECK(oracle_is_1queue(testgen::path(12), 12).one_queue);
}
