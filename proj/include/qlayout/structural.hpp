#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlayout/graph.hpp"

namespace qlayout {

// Rooted forest whose ancestor closure contains every edge of the graph.
// depth of a root is 1; height is the maximum depth.
struct TreedepthDecomposition {
  std::vector<Vertex> parent;  // -1 for roots
  std::vector<int> depth;
  int height = 0;

  // Ancestors of t including t, sorted.
  VertexSet path_to_root(Vertex t) const;

  // Empty string when the decomposition is valid for g; otherwise a short
  // description of the first problem found.
  std::string why_invalid(const Graph& g) const;
};

// Minimum-height decomposition if its height is at most `budget`, else
// nullopt. Exact recursive root removal, memoized on vertex subsets, with
// a long-path filter as an early reject for small budgets.
// Throws std::invalid_argument on disconnected input.
std::optional<TreedepthDecomposition> compute_treedepth(const Graph& g, int budget);

// True iff g contains a simple path with 2^k edges. Exact search with
// pruning; only usable as a negative filter for treedepth. Requires
// 0 <= k <= 6 (throws CapacityError above, std::invalid_argument below).
bool has_long_path(const Graph& g, int k);

struct VertexCover {
  VertexSet vertices;
  int size() const { return static_cast<int>(vertices.size()); }
};

bool is_vertex_cover(const Graph& g, const VertexSet& cover);

// A minimum vertex cover if its size is at most `budget`, else nullopt.
// Bounded search tree branching on an uncovered edge, with degree-1 and
// dominance simplifications.
std::optional<VertexCover> min_vertex_cover(const Graph& g, int budget);

}  // namespace qlayout
