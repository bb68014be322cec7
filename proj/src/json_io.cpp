#include "qlayout/json_io.hpp"

#include <algorithm>
#include <map>

#include "qlayout/errors.hpp"

#include <json.hpp>

namespace qlayout {

using nlohmann::json;

std::string layout_to_json(const Graph& g, const LinearLayout& l) {
  json doc;
  doc["order"] = json::array();
  for (Vertex v : l.order) doc["order"].push_back(g.label(v));
  json queues = json::object();
  for (int q = 1; q <= l.num_queues; ++q) {
    json arr = json::array();
    for (int e = 0; e < g.edge_count(); ++e)
      if (l.queues[e] == q) {
        const auto& [u, v] = g.edges()[e];
        arr.push_back(json::array({g.label(u), g.label(v)}));
      }
    if (!arr.empty()) queues[std::to_string(q)] = std::move(arr);
  }
  doc["queues"] = std::move(queues);
  return doc.dump(2) + "\n";
}

namespace {

std::string label_of(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError("labels must be strings or integers");
}

}  // namespace

LinearLayout layout_from_json(const Graph& g, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("queues"))
    throw ParseError("layout JSON needs \"order\" and \"queues\"");

  LinearLayout l;
  for (const auto& item : doc["order"]) {
    Vertex v = g.vertex_by_label(label_of(item));
    if (v == -1)
      throw std::invalid_argument("layout mentions unknown vertex '" + label_of(item) + "'");
    l.order.push_back(v);
  }
  if (static_cast<int>(l.order.size()) != g.vertex_count())
    throw std::invalid_argument("layout order does not cover the vertex set");

  l.queues.assign(g.edge_count(), 0);
  for (const auto& [key, arr] : doc["queues"].items()) {
    int q = 0;
    try {
      q = std::stoi(key);
    } catch (...) {
      throw ParseError("queue keys must be positive integers");
    }
    if (q < 1) throw ParseError("queue keys must be positive integers");
    for (const auto& pair : arr) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("edges must be pairs");
      Vertex u = g.vertex_by_label(label_of(pair[0]));
      Vertex v = g.vertex_by_label(label_of(pair[1]));
      if (u == -1 || v == -1)
        throw std::invalid_argument("layout mentions an edge with unknown endpoints");
      int e = g.edge_index(u, v);
      if (e == -1)
        throw std::invalid_argument("layout assigns a queue to the non-edge " +
                                    g.label(u) + "-" + g.label(v));
      if (l.queues[e] != 0)
        throw std::invalid_argument("edge " + g.label(u) + "-" + g.label(v) +
                                    " is assigned twice");
      l.queues[e] = q;
      l.num_queues = std::max(l.num_queues, q);
    }
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (l.queues[e] == 0) {
      const auto& [u, v] = g.edges()[e];
      throw std::invalid_argument("layout misses edge " + g.label(u) + "-" + g.label(v));
    }
  return l;
}

std::string decomposition_to_json(const Graph& g, const TreedepthDecomposition& t) {
  json parent = json::object();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (t.parent[v] == -1)
      parent[g.label(v)] = nullptr;
    else
      parent[g.label(v)] = g.label(t.parent[v]);
  }
  json doc;
  doc["parent"] = std::move(parent);
  doc["height"] = t.height;
  return doc.dump(2) + "\n";
}

std::string cover_to_json(const Graph& g, const VertexCover& c) {
  json doc;
  doc["cover"] = json::array();
  for (Vertex v : c.vertices) doc["cover"].push_back(g.label(v));
  return doc.dump(2) + "\n";
}

std::string removal_log_to_json(const Graph& g, const std::vector<td::RemovalRecord>& log) {
  json arr = json::array();
  for (const auto& rec : log) {
    json item;
    item["anchor"] = g.label(rec.anchor);
    item["depth"] = rec.level;
    item["removed"] = json::array();
    for (Vertex v : rec.removed) item["removed"].push_back(g.label(v));
    item["class_size"] = rec.class_size;
    arr.push_back(std::move(item));
  }
  return arr.dump(2) + "\n";
}

std::string trim_log_to_json(const Graph& g, const std::vector<vc::TrimRecord>& log) {
  json arr = json::array();
  for (const auto& rec : log) {
    json item;
    item["vertex"] = g.label(rec.vertex);
    item["type"] = json::array();
    for (Vertex v : rec.neighborhood) item["type"].push_back(g.label(v));
    arr.push_back(std::move(item));
  }
  return arr.dump(2) + "\n";
}

}  // namespace qlayout
