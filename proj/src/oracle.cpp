#include "qlayout/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "qlayout/errors.hpp"

namespace qlayout {

namespace {

// Longest containment chain among the intervals of already-placed edges.
int prefix_chain(std::vector<std::pair<int, int>> iv) {
  if (iv.empty()) return 0;
  std::sort(iv.begin(), iv.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  std::vector<int> chain(iv.size(), 1);
  int best = 1;
  for (int i = static_cast<int>(iv.size()) - 1; i >= 0; --i) {
    for (std::size_t j = i + 1; j < iv.size(); ++j)
      if (iv[i].first < iv[j].first && iv[j].second < iv[i].second)
        chain[i] = std::max(chain[i], 1 + chain[j]);
    best = std::max(best, chain[i]);
  }
  return best;
}

struct ExhaustiveSearch {
  const Graph& g;
  int best;
  std::vector<Vertex> best_order;
  std::uint64_t examined = 0;

  std::vector<Vertex> order;
  std::vector<char> used;
  std::vector<int> position;
  std::vector<std::pair<int, int>> complete;

  explicit ExhaustiveSearch(const Graph& graph)
      : g(graph),
        best(graph.edge_count() + 1),
        used(graph.vertex_count(), 0),
        position(graph.vertex_count(), -1) {}

  void run() { descend(0); }

  void descend(int p) {
    if (p == g.vertex_count()) {
      ++examined;
      int r = prefix_chain(complete);
      if (r < best) {
        best = r;
        best_order = order;
      }
      return;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (used[v]) continue;
      std::size_t added = 0;
      for (Vertex w : g.neighbors(v))
        if (position[w] != -1) {
          complete.emplace_back(position[w], p);
          ++added;
        }
      // a prefix rainbow survives every extension of the prefix
      if (prefix_chain(complete) < best) {
        used[v] = 1;
        position[v] = p;
        order.push_back(v);
        descend(p + 1);
        order.pop_back();
        position[v] = -1;
        used[v] = 0;
      }
      complete.resize(complete.size() - added);
    }
  }
};

void check_cap(const Graph& g, int cap) {
  if (g.vertex_count() > cap)
    throw CapacityError("graph has " + std::to_string(g.vertex_count()) +
                        " vertices, above the oracle cap of " + std::to_string(cap));
}

}  // namespace

OracleResult oracle_queue_number(const Graph& g, int cap) {
  check_cap(g, cap);
  OracleResult result;
  if (g.vertex_count() == 0) return result;
  if (g.edge_count() == 0) {
    result.layout.order.resize(g.vertex_count());
    std::iota(result.layout.order.begin(), result.layout.order.end(), 0);
    result.orders_examined = 1;
    return result;
  }
  ExhaustiveSearch search(g);
  search.run();
  result.queue_number = search.best;
  result.layout = min_queues_for_order(g, search.best_order);
  result.orders_examined = search.examined;
  return result;
}

OracleDecision oracle_is_1queue(const Graph& g, int cap) {
  check_cap(g, cap);
  OracleDecision result;
  if (g.edge_count() == 0) {
    LinearLayout l;
    l.order.resize(g.vertex_count());
    std::iota(l.order.begin(), l.order.end(), 0);
    result.one_queue = true;
    result.layout = std::move(l);
    result.orders_examined = 1;
    return result;
  }

  struct Search {
    const Graph& g;
    std::uint64_t examined = 0;
    std::vector<Vertex> order;
    std::vector<char> used;
    std::vector<int> position;
    std::vector<std::pair<int, int>> complete;

    explicit Search(const Graph& graph)
        : g(graph), used(graph.vertex_count(), 0), position(graph.vertex_count(), -1) {}

    bool descend(int p) {
      if (p == g.vertex_count()) {
        ++examined;
        return true;
      }
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (used[v]) continue;
        std::size_t added = 0;
        bool ok = true;
        for (Vertex w : g.neighbors(v)) {
          if (position[w] == -1) continue;
          std::pair<int, int> e{position[w], p};
          for (const auto& f : complete)
            if ((f.first < e.first && e.second < f.second) ||
                (e.first < f.first && f.second < e.second)) {
              ok = false;
              break;
            }
          if (!ok) break;
          complete.emplace_back(e);
          ++added;
        }
        if (ok) {
          used[v] = 1;
          position[v] = p;
          order.push_back(v);
          if (descend(p + 1)) return true;
          order.pop_back();
          position[v] = -1;
          used[v] = 0;
        }
        complete.resize(complete.size() - added);
      }
      return false;
    }
  };

  Search search(g);
  if (search.descend(0)) {
    result.one_queue = true;
    LinearLayout l;
    l.order = search.order;
    l.queues.assign(g.edge_count(), 1);
    l.num_queues = 1;
    result.layout = std::move(l);
  }
  result.orders_examined = search.examined;
  return result;
}

}  // namespace qlayout
