#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qlayout {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // always stored with first < second

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

inline Edge make_edge(Vertex u, Vertex v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Simple undirected graph over dense vertex ids 0..n-1. Original input
// labels are kept for output; programmatically built graphs get decimal
// labels. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;

  // Index of edge (u,v) in edges(), or -1 if absent.
  int edge_index(Vertex u, Vertex v) const;

  const std::string& label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  // -1 when no vertex carries this label.
  Vertex vertex_by_label(const std::string& label) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;                // sorted
  std::vector<std::vector<Vertex>> adj_;   // sorted per vertex
  std::vector<std::string> labels_;
};

// Parses either the edge-list format (one edge per line, two whitespace
// separated labels, '#' comments and blank lines ignored) or the JSON
// format {"vertices":[...], "edges":[[a,b],...]}. Throws ParseError.
Graph parse_graph(const std::string& text);

std::string to_edge_list(const Graph& g);
std::string graph_to_json(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct Subgraph {
  Graph graph;
  VertexSet to_host;  // new id -> host id
};

// Graph induced on `keep` (sorted host ids); throws std::invalid_argument
// on unknown or unsorted input.
Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
Subgraph remove_vertices(const Graph& g, const VertexSet& drop);

// Set helpers used throughout the kernels.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, Vertex v);

}  // namespace qlayout
