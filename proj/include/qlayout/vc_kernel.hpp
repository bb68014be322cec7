#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qlayout/graph.hpp"
#include "qlayout/layout.hpp"
#include "qlayout/structural.hpp"

namespace qlayout::vc {

// Non-cover vertices sharing the exact neighborhood `neighborhood` (a
// subset of the cover). Members are pairwise non-adjacent.
struct TypeClass {
  VertexSet neighborhood;
  VertexSet members;
};

// Partition of the non-cover vertices by exact neighborhood; classes are
// sorted by neighborhood, members ascending. Isolated vertices form the
// empty-neighborhood class.
std::vector<TypeClass> type_partition(const Graph& g, const VertexCover& cover);

// Layout witnessing that a graph with a size-t cover has a t-queue layout:
// cover vertices first, everything else after in id order; the edge u-c_i
// goes to queue i when u precedes c_i in that arrangement. Unused queue
// labels are compacted. Throws std::invalid_argument on an invalid cover.
LinearLayout cover_layout(const Graph& g, const VertexCover& cover);

struct TrimRecord {
  Vertex vertex;            // input-graph id
  VertexSet neighborhood;   // its class key
};

struct VcKernel {
  Graph kernel;
  VertexSet kernel_to_input;
  std::vector<TrimRecord> trimmed;  // in removal order
  std::int64_t class_cap = 0;       // 2*h^tau + 1
};

// Removes members (largest id first) from every class until each has at
// most 2*h^tau + 1 members. Requires h >= 1.
VcKernel build_kernel(const Graph& g, const VertexCover& cover, int h);

// Searches for an h-queue layout of a (small) graph by enumerating vertex
// orders modulo swapping same-type non-cover vertices, pruning prefixes
// that already force more than h queues. Deterministic: the first feasible
// order in the enumeration wins.
std::optional<LinearLayout> solve_kernel(const Graph& g, const VertexCover& cover, int h);

// Extends a layout of g - v to g: groups v's class by the per-cover-vertex
// queue assignment, picks a group with at least three members, places v
// immediately right of that group's leftmost member and copies its queue
// assignment edge-wise. layout_without is over induced_subgraph(g, V-{v}).
// The result is validated; failure raises InternalError. Throws
// std::invalid_argument when no group has three members.
LinearLayout reinsert_vertex(const Graph& g, const VertexCover& cover, Vertex v,
                             const LinearLayout& layout_without);

struct QueueNumberResult {
  int queue_number = 0;
  LinearLayout layout;
  VertexCover cover;
};

// Minimum number of queues and a witness layout: computes a minimum cover,
// binary searches h in [1, tau] with a kernel built and solved per probe,
// then lifts the kernel layout by reinserting trimmed vertices in reverse
// order. Throws std::invalid_argument on disconnected input.
QueueNumberResult queue_number(const Graph& g);

}  // namespace qlayout::vc
