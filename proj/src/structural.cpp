#include "qlayout/structural.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "qlayout/errors.hpp"

namespace qlayout {

VertexSet TreedepthDecomposition::path_to_root(Vertex t) const {
  VertexSet path;
  for (Vertex v = t; v != -1; v = parent[v]) path.push_back(v);
  std::sort(path.begin(), path.end());
  return path;
}

std::string TreedepthDecomposition::why_invalid(const Graph& g) const {
  int n = g.vertex_count();
  if (static_cast<int>(parent.size()) != n || static_cast<int>(depth.size()) != n)
    return "decomposition size does not match the graph";
  for (Vertex v = 0; v < n; ++v) {
    if (parent[v] == v) return "vertex is its own parent";
    if (parent[v] != -1 && (parent[v] < 0 || parent[v] >= n)) return "parent out of range";
    int expected = parent[v] == -1 ? 1 : depth[parent[v]] + 1;
    if (depth[v] != expected) return "depth inconsistent with parent chain";
    if (depth[v] < 1 || depth[v] > height) return "depth outside [1, height]";
  }
  // acyclicity follows from depth[v] = depth[parent]+1; check the closure
  for (const auto& [u, v] : g.edges()) {
    bool related = false;
    for (Vertex a = u; a != -1; a = parent[a])
      if (a == v) {
        related = true;
        break;
      }
    for (Vertex a = v; !related && a != -1; a = parent[a])
      if (a == u) related = true;
    if (!related)
      return "edge " + g.label(u) + "-" + g.label(v) + " joins unrelated vertices";
  }
  return "";
}

namespace {

// --- exact treedepth by recursive root removal ------------------------------

using SubsetKey = std::vector<std::uint64_t>;

struct SubsetKeyHash {
  std::size_t operator()(const SubsetKey& k) const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : k) {
      h ^= std::hash<std::uint64_t>()(w);
      h *= 1099511628211ull;
    }
    return h;
  }
};

constexpr std::size_t kMemoCap = std::size_t(1) << 22;

struct TdSolver {
  const Graph& g;
  std::unordered_map<SubsetKey, std::pair<int, Vertex>, SubsetKeyHash> memo;

  explicit TdSolver(const Graph& graph) : g(graph) {}

  SubsetKey key_of(const VertexSet& s) const {
    SubsetKey k((g.vertex_count() + 63) / 64, 0);
    for (Vertex v : s) k[v >> 6] |= std::uint64_t(1) << (v & 63);
    return k;
  }

  std::vector<VertexSet> split_components(const VertexSet& s, Vertex removed) const {
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : s) in[v] = 1;
    in[removed] = 0;
    std::vector<VertexSet> comps;
    std::vector<char> seen(g.vertex_count(), 0);
    for (Vertex start : s) {
      if (start == removed || seen[start] || !in[start]) continue;
      VertexSet comp;
      std::vector<Vertex> stack{start};
      seen[start] = 1;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (Vertex w : g.neighbors(v))
          if (in[w] && !seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    return comps;
  }

  // Exact treedepth of the connected induced subgraph on s, plus an optimal
  // root. Deterministic: smallest optimal root by id.
  std::pair<int, Vertex> solve(const VertexSet& s) {
    if (s.size() == 1) return {1, s[0]};
    SubsetKey key = key_of(s);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    bool any_edge = false;
    for (Vertex v : s) {
      for (Vertex w : g.neighbors(v))
        if (std::binary_search(s.begin(), s.end(), w)) {
          any_edge = true;
          break;
        }
      if (any_edge) break;
    }
    if (!any_edge) {
      // disconnected input never reaches here; a 1-vertex set was handled
      std::pair<int, Vertex> r{1, s[0]};
      if (memo.size() < kMemoCap) memo.emplace(std::move(key), r);
      return r;
    }

    int best = static_cast<int>(s.size());
    Vertex best_root = s[0];
    for (Vertex v : s) {
      int h = 1;
      for (const auto& comp : split_components(s, v)) {
        // a component with an edge needs depth >= 2 below v
        if (h >= best) break;
        h = std::max(h, 1 + solve(comp).first);
      }
      if (h < best) {
        best = h;
        best_root = v;
        if (best == 2) break;  // cannot do better on a graph with an edge
      }
    }
    std::pair<int, Vertex> r{best, best_root};
    if (memo.size() < kMemoCap) memo.emplace(std::move(key), r);
    return r;
  }

  void build(const VertexSet& s, Vertex parent_of_root, std::vector<Vertex>& parent) {
    if (s.size() == 1) {
      parent[s[0]] = parent_of_root;
      return;
    }
    Vertex root = solve(s).second;
    parent[root] = parent_of_root;
    for (const auto& comp : split_components(s, root)) build(comp, root, parent);
  }
};

}  // namespace

std::optional<TreedepthDecomposition> compute_treedepth(const Graph& g, int budget) {
  if (g.vertex_count() == 0) {
    if (budget < 0) return std::nullopt;
    return TreedepthDecomposition{};
  }
  if (!is_connected(g)) throw std::invalid_argument("treedepth requires a connected graph");
  if (budget < 1) return std::nullopt;

  // cheap negative filter: a path with 2^budget edges rules the budget out
  if (budget <= 6 && has_long_path(g, budget)) return std::nullopt;

  TdSolver solver(g);
  VertexSet all(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
  int td = solver.solve(all).first;
  if (td > budget) return std::nullopt;

  TreedepthDecomposition deco;
  deco.parent.assign(g.vertex_count(), -1);
  solver.build(all, -1, deco.parent);
  deco.depth.assign(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int d = 0;
    for (Vertex a = v; a != -1; a = deco.parent[a]) ++d;
    deco.depth[v] = d;
    deco.height = std::max(deco.height, d);
  }
  return deco;
}

namespace {

bool long_path_dfs(const Graph& g, Vertex v, int remaining, std::vector<char>& used) {
  if (remaining == 0) return true;
  used[v] = 1;
  for (Vertex w : g.neighbors(v)) {
    if (used[w]) continue;
    if (long_path_dfs(g, w, remaining - 1, used)) {
      used[v] = 0;
      return true;
    }
  }
  used[v] = 0;
  return false;
}

}  // namespace

bool has_long_path(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("path length exponent must be non-negative");
  if (k > 6) throw CapacityError("long-path filter supports at most 2^6 edges");
  int target = 1 << k;
  if (g.vertex_count() < target + 1) return false;
  std::vector<char> used(g.vertex_count(), 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s)
    if (long_path_dfs(g, s, target, used)) return true;
  return false;
}

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  for (const auto& [u, v] : g.edges())
    if (!set_contains(cover, u) && !set_contains(cover, v)) return false;
  return true;
}

namespace {

// --- minimum vertex cover by bounded search tree ----------------------------

struct VcSolver {
  const Graph& g;
  std::vector<char> removed;  // vertex no longer present
  VertexSet chosen;

  explicit VcSolver(const Graph& graph) : g(graph), removed(graph.vertex_count(), 0) {}

  int live_degree(Vertex v) const {
    int d = 0;
    for (Vertex w : g.neighbors(v))
      if (!removed[w]) ++d;
    return d;
  }

  // N(b) \ {a} subseteq N(a) over live vertices
  bool dominates(Vertex a, Vertex b) const {
    for (Vertex w : g.neighbors(b)) {
      if (removed[w] || w == a) continue;
      if (!g.has_edge(a, w)) return false;
    }
    return true;
  }

  void take(Vertex v, std::vector<Vertex>& trail) {
    removed[v] = 1;
    chosen.push_back(v);
    trail.push_back(v);
  }

  void undo(std::vector<Vertex>& trail) {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      removed[*it] = 0;
      chosen.pop_back();
    }
  }

  bool solve(int budget) {
    std::vector<Vertex> trail;

    // forced moves: degree-1 neighbors and dominating endpoints
    bool progress = true;
    while (progress) {
      progress = false;
      for (Vertex v = 0; v < g.vertex_count() && !progress; ++v) {
        if (removed[v]) continue;
        int d = live_degree(v);
        if (d == 0) continue;
        if (d == 1) {
          for (Vertex w : g.neighbors(v))
            if (!removed[w]) {
              if (budget == 0) {
                undo(trail);
                return false;
              }
              take(w, trail);
              --budget;
              progress = true;
              break;
            }
        }
      }
      if (progress) continue;
      for (Vertex u = 0; u < g.vertex_count() && !progress; ++u) {
        if (removed[u]) continue;
        for (Vertex v : g.neighbors(u)) {
          if (removed[v] || v < u) continue;
          if (dominates(u, v)) {
            if (budget == 0) {
              undo(trail);
              return false;
            }
            take(u, trail);
            --budget;
            progress = true;
            break;
          }
          if (dominates(v, u)) {
            if (budget == 0) {
              undo(trail);
              return false;
            }
            take(v, trail);
            --budget;
            progress = true;
            break;
          }
        }
      }
    }

    Edge branch{-1, -1};
    for (const auto& [u, v] : g.edges())
      if (!removed[u] && !removed[v]) {
        branch = {u, v};
        break;
      }
    if (branch.first == -1) return true;  // no live edge left
    if (budget == 0) {
      undo(trail);
      return false;
    }
    for (Vertex pick : {branch.first, branch.second}) {
      std::vector<Vertex> sub;
      take(pick, sub);
      if (solve(budget - 1)) return true;
      undo(sub);
    }
    undo(trail);
    return false;
  }
};

}  // namespace

std::optional<VertexCover> min_vertex_cover(const Graph& g, int budget) {
  budget = std::min(budget, g.vertex_count());
  for (int size = 0; size <= budget; ++size) {
    VcSolver solver(g);
    if (solver.solve(size)) {
      std::sort(solver.chosen.begin(), solver.chosen.end());
      return VertexCover{std::move(solver.chosen)};
    }
  }
  return std::nullopt;
}

}  // namespace qlayout
