#pragma once

#include <string>
#include <vector>

#include "qlayout/graph.hpp"

namespace qlayout {

// A linear layout: a vertex order plus an assignment of every edge to a
// queue. Queue indices are 1-based; num_queues is 0 only for edgeless
// graphs. queues is parallel to Graph::edges().
struct LinearLayout {
  std::vector<Vertex> order;  // position -> vertex
  std::vector<int> queues;    // per edge index, 1-based
  int num_queues = 0;
};

// A set of pairwise independent edges that pairwise nest under some order,
// listed outermost first.
struct Rainbow {
  std::vector<Edge> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

struct ValidationResult {
  enum class Status { ok, violation, structural };
  Status status = Status::ok;
  int queue = 0;
  Edge first{-1, -1};
  Edge second{-1, -1};
  std::string detail;

  explicit operator bool() const { return status == Status::ok; }
};

// position[v] for every vertex of g; throws std::invalid_argument when
// `order` is not a permutation of g's vertices.
std::vector<int> positions_of(const Graph& g, const std::vector<Vertex>& order);

// True iff the two edges have four distinct endpoints and one strictly
// encloses the other under the given order. Pairs sharing an endpoint
// never nest.
bool edges_nest(const std::vector<Vertex>& order, Edge a, Edge b);
bool edges_nest_at(const std::vector<int>& position, Edge a, Edge b);

// ok iff no two independent same-queue edges nest; returns one witness
// pair otherwise. Structural problems (order not a permutation, queue
// assignment missing or out of range) are reported distinctly.
ValidationResult validate_layout(const Graph& g, const LinearLayout& l);

// Maximum-cardinality rainbow under the order, via longest-chain dynamic
// programming over strict interval containment. Deterministic tie-break:
// lexicographically smallest witness by sorted endpoint positions.
Rainbow max_rainbow(const Graph& g, const std::vector<Vertex>& order);

// Optimal queue assignment for a fixed order: each edge goes to queue
// 1 + (longest chain strictly nested inside it). The number of queues
// equals the maximum rainbow size for this order.
LinearLayout min_queues_for_order(const Graph& g, const std::vector<Vertex>& order);

// Arc diagram: vertices on a horizontal line in layout order, edges as
// semicircular arcs colored per queue. Deterministic output.
std::string layout_to_svg(const Graph& g, const LinearLayout& l);

}  // namespace qlayout
