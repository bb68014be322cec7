#include "qlayout/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "qlayout/errors.hpp"

#include <json.hpp>

namespace qlayout {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (int v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
  }
  if (static_cast<int>(labels_.size()) != n_)
    throw std::invalid_argument("label count does not match vertex count");

  for (auto& e : edges) {
    if (e.first == e.second)
      throw std::invalid_argument("self-loop at vertex '" + labels_[e.first] + "'");
    if (e.first < 0 || e.first >= n_ || e.second < 0 || e.second >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    e = make_edge(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("unknown vertex id");
  return adj_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(Vertex u, Vertex v) const {
  Edge e = make_edge(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

const std::string& Graph::label(Vertex v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("unknown vertex id");
  return labels_[v];
}

Vertex Graph::vertex_by_label(const std::string& label) const {
  for (int v = 0; v < n_; ++v)
    if (labels_[v] == label) return v;
  return -1;
}

namespace {

Graph from_label_edges(std::vector<std::string> order_of_appearance,
                       const std::vector<std::pair<std::string, std::string>>& label_edges,
                       const std::vector<int>& lines) {
  std::unordered_map<std::string, Vertex> id;
  std::vector<std::string> labels;
  auto intern = [&](const std::string& s) {
    auto it = id.find(s);
    if (it != id.end()) return it->second;
    Vertex v = static_cast<Vertex>(labels.size());
    id.emplace(s, v);
    labels.push_back(s);
    return v;
  };
  for (const auto& s : order_of_appearance) intern(s);

  std::vector<Edge> edges;
  edges.reserve(label_edges.size());
  for (std::size_t i = 0; i < label_edges.size(); ++i) {
    Vertex u = intern(label_edges[i].first);
    Vertex v = intern(label_edges[i].second);
    if (u == v)
      throw ParseError("self-loop at vertex '" + label_edges[i].first + "'",
                       i < lines.size() ? lines[i] : 0);
    edges.push_back(make_edge(u, v));
  }
  int n = static_cast<int>(labels.size());
  return Graph(n, std::move(edges), std::move(labels));
}

std::string json_label(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError("vertex labels must be strings or integers");
}

Graph parse_json_graph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw ParseError("graph JSON needs \"vertices\" and \"edges\"");

  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) vertices.push_back(json_label(v));

  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair");
    edges.emplace_back(json_label(e[0]), json_label(e[1]));
  }
  Graph g = from_label_edges(vertices, edges, {});
  if (g.vertex_count() != static_cast<int>(vertices.size()))
    throw ParseError("duplicate vertex label in \"vertices\"");
  for (const auto& [a, b] : edges)
    if (std::find(vertices.begin(), vertices.end(), a) == vertices.end() ||
        std::find(vertices.begin(), vertices.end(), b) == vertices.end())
      throw ParseError("edge endpoint not listed in \"vertices\"");
  return g;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json_graph(text);

  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<int> lines;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b)) throw ParseError("expected two vertex labels", line_no);
    if (ls >> extra) throw ParseError("trailing tokens after edge", line_no);
    edges.emplace_back(a, b);
    lines.push_back(line_no);
  }
  return from_label_edges({}, edges, lines);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
  return out.str();
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json doc;
  doc["vertices"] = nlohmann::json::array();
  for (int v = 0; v < g.vertex_count(); ++v) doc["vertices"].push_back(g.label(v));
  doc["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges())
    doc["edges"].push_back(nlohmann::json::array({g.label(u), g.label(v)}));
  return doc.dump(2) + "\n";
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  // components come out ordered by smallest member already (s ascending)
  return out;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (!std::is_sorted(keep.begin(), keep.end()) ||
      std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    throw std::invalid_argument("vertex set must be strictly increasing");
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= g.vertex_count())
      throw std::invalid_argument("unknown vertex id in subset");
    local[keep[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (Vertex v : keep) labels.push_back(g.label(v));
  for (const auto& [u, v] : g.edges())
    if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
  return Subgraph{Graph(static_cast<int>(keep.size()), std::move(edges), std::move(labels)),
                  keep};
}

Subgraph remove_vertices(const Graph& g, const VertexSet& drop) {
  VertexSet all(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
  return induced_subgraph(g, set_difference(all, drop));
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

}  // namespace qlayout
