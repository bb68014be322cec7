#include "qlayout/vc_kernel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "qlayout/errors.hpp"

namespace qlayout::vc {

namespace {

struct EdgeHash {
  std::size_t operator()(const Edge& e) const {
    return std::hash<long long>()((static_cast<long long>(e.first) << 32) ^ e.second);
  }
};

std::int64_t saturating_pow(std::int64_t base, int exp) {
  constexpr std::int64_t kLimit = std::int64_t(1) << 60;
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > kLimit / std::max<std::int64_t>(base, 1)) return kLimit;
    r *= base;
  }
  return r;
}

}  // namespace

std::vector<TypeClass> type_partition(const Graph& g, const VertexCover& cover) {
  if (!is_vertex_cover(g, cover.vertices))
    throw std::invalid_argument("the given set is not a vertex cover");
  std::map<VertexSet, VertexSet> classes;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (set_contains(cover.vertices, v)) continue;
    classes[g.neighbors(v)].push_back(v);
  }
  std::vector<TypeClass> out;
  out.reserve(classes.size());
  for (auto& [key, members] : classes) out.push_back(TypeClass{key, std::move(members)});
  return out;
}

LinearLayout cover_layout(const Graph& g, const VertexCover& cover) {
  if (!is_vertex_cover(g, cover.vertices))
    throw std::invalid_argument("the given set is not a vertex cover");

  LinearLayout l;
  l.order.reserve(g.vertex_count());
  std::vector<int> cover_index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < cover.vertices.size(); ++i) {
    cover_index[cover.vertices[i]] = static_cast<int>(i);
    l.order.push_back(cover.vertices[i]);
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (cover_index[v] == -1) l.order.push_back(v);

  // the edge u-c_i joins queue i, where c_i is the later cover endpoint;
  // every queue then forms a star around its cover vertex
  std::vector<int> raw(g.edge_count(), 0);
  int used_max = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edges()[e];
    int iu = cover_index[u], iv = cover_index[v];
    raw[e] = 1 + std::max(iu, iv);
    used_max = std::max(used_max, raw[e]);
  }
  // compact unused labels
  std::vector<int> remap(used_max + 1, 0);
  for (int q : raw) remap[q] = 1;
  int next = 0;
  for (int q = 1; q <= used_max; ++q)
    if (remap[q]) remap[q] = ++next;
  l.queues.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) l.queues[e] = remap[raw[e]];
  l.num_queues = next;
  return l;
}

VcKernel build_kernel(const Graph& g, const VertexCover& cover, int h) {
  if (h < 1) throw std::invalid_argument("kernel construction needs h >= 1");
  auto classes = type_partition(g, cover);

  VcKernel result;
  int tau = cover.size();
  result.class_cap = 2 * saturating_pow(h, tau) + 1;

  VertexSet trimmed_set;
  for (const auto& cls : classes) {
    auto members = cls.members;  // ascending
    while (static_cast<std::int64_t>(members.size()) > result.class_cap) {
      Vertex v = members.back();
      members.pop_back();
      result.trimmed.push_back(TrimRecord{v, cls.neighborhood});
      trimmed_set.push_back(v);
    }
  }
  std::sort(trimmed_set.begin(), trimmed_set.end());
  Subgraph sub = remove_vertices(g, trimmed_set);
  result.kernel = std::move(sub.graph);
  result.kernel_to_input = std::move(sub.to_host);
  return result;
}

namespace {

// Longest containment chain among position intervals; the prefix pruning
// bound during order enumeration.
int interval_chain(std::vector<std::pair<int, int>> iv) {
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

struct KernelSearch {
  const Graph& g;
  int h;
  std::vector<std::vector<Vertex>> groups;  // interchangeable vertices, ascending
  std::vector<std::size_t> taken;           // per group
  std::vector<Vertex> order;
  std::vector<int> position;
  std::vector<std::pair<int, int>> complete;

  KernelSearch(const Graph& graph, int limit) : g(graph), h(limit), position(graph.vertex_count(), -1) {}

  bool place(int p) {
    if (p == g.vertex_count()) return true;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      if (taken[gi] == groups[gi].size()) continue;
      Vertex v = groups[gi][taken[gi]];
      std::size_t added = 0;
      for (Vertex w : g.neighbors(v))
        if (position[w] != -1) {
          complete.emplace_back(position[w], p);
          ++added;
        }
      bool ok = interval_chain(complete) <= h;
      if (ok) {
        ++taken[gi];
        position[v] = p;
        order.push_back(v);
        if (place(p + 1)) return true;
        order.pop_back();
        position[v] = -1;
        --taken[gi];
      }
      complete.resize(complete.size() - added);
    }
    return false;
  }
};

}  // namespace

std::optional<LinearLayout> solve_kernel(const Graph& g, const VertexCover& cover, int h) {
  if (h < 0) throw std::invalid_argument("queue count must be non-negative");
  if (g.edge_count() == 0) {
    LinearLayout l;
    l.order.resize(g.vertex_count());
    std::iota(l.order.begin(), l.order.end(), 0);
    return l;
  }
  if (h == 0) return std::nullopt;

  KernelSearch search(g, h);
  // cover vertices are pairwise distinguishable; non-cover vertices are
  // interchangeable within a type class
  for (Vertex c : cover.vertices) search.groups.push_back({c});
  for (auto& cls : type_partition(g, cover)) search.groups.push_back(cls.members);
  search.taken.assign(search.groups.size(), 0);

  if (!search.place(0)) return std::nullopt;
  LinearLayout l = min_queues_for_order(g, search.order);
  if (l.num_queues > h)
    throw InternalError("prefix-pruned search accepted an order above the queue bound");
  return l;
}

LinearLayout reinsert_vertex(const Graph& g, const VertexCover& cover, Vertex v,
                             const LinearLayout& layout_without) {
  if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("unknown vertex");
  if (set_contains(cover.vertices, v))
    throw std::invalid_argument("only non-cover vertices can be reinserted");
  Subgraph sub = remove_vertices(g, {v});
  ValidationResult pre = validate_layout(sub.graph, layout_without);
  if (!pre)
    throw std::invalid_argument("layout of the graph without the vertex is invalid: " +
                                pre.detail);

  auto local_of = [&](Vertex host) {  // host id -> id in sub (host != v)
    return host < v ? host : host - 1;
  };

  const VertexSet& hood = g.neighbors(v);

  LinearLayout out;
  out.num_queues = layout_without.num_queues;
  out.queues.assign(g.edge_count(), 0);

  std::vector<Vertex> host_order;
  host_order.reserve(sub.graph.vertex_count());
  for (Vertex w : layout_without.order) host_order.push_back(sub.to_host[w]);

  int copy_from = -1;  // host vertex whose queue assignment v mirrors
  if (hood.empty()) {
    host_order.push_back(v);  // no edges; the far right is always safe
  } else {
    // members of v's class, keyed by which queue serves each cover neighbor
    using Signature = std::vector<int>;
    std::map<Signature, std::vector<Vertex>> buckets;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (w == v || set_contains(cover.vertices, w)) continue;
      if (g.neighbors(w) != hood) continue;
      Signature sig;
      sig.reserve(hood.size());
      for (Vertex c : hood) {
        int e = sub.graph.edge_index(local_of(w), local_of(c));
        sig.push_back(layout_without.queues[e]);
      }
      buckets[sig].push_back(w);
    }
    std::vector<int> sub_pos = positions_of(sub.graph, layout_without.order);
    Vertex leftmost = -1;
    for (const auto& [sig, members] : buckets) {
      if (members.size() < 3) continue;
      for (Vertex w : members)
        if (leftmost == -1 || sub_pos[local_of(w)] < sub_pos[local_of(leftmost)])
          leftmost = w;
      break;  // buckets iterate in deterministic signature order
    }
    if (leftmost == -1)
      throw std::invalid_argument(
          "no queue-assignment class with three members; the class of the vertex "
          "is too small to reinsert");
    copy_from = leftmost;
    auto it = std::find(host_order.begin(), host_order.end(), leftmost);
    host_order.insert(it + 1, v);
  }

  out.order = std::move(host_order);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& [a, b] = g.edges()[e];
    if (a == v || b == v) {
      Vertex c = a == v ? b : a;
      int f = sub.graph.edge_index(local_of(copy_from), local_of(c));
      out.queues[e] = layout_without.queues[f];
    } else {
      int f = sub.graph.edge_index(local_of(a), local_of(b));
      out.queues[e] = layout_without.queues[f];
    }
  }

  ValidationResult check = validate_layout(g, out);
  if (!check)
    throw InternalError("reinsertion produced an invalid layout: " +
                        (check.detail.empty()
                             ? "nesting pair in queue " + std::to_string(check.queue)
                             : check.detail));
  return out;
}

QueueNumberResult queue_number(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("queue number computation requires a connected graph");

  QueueNumberResult result;
  if (g.edge_count() == 0) {
    result.layout.order.resize(g.vertex_count());
    std::iota(result.layout.order.begin(), result.layout.order.end(), 0);
    return result;
  }

  result.cover = *min_vertex_cover(g, g.vertex_count());
  int tau = result.cover.size();

  auto probe = [&](int h) -> std::optional<std::pair<VcKernel, LinearLayout>> {
    VcKernel kern = build_kernel(g, result.cover, h);
    std::vector<int> to_local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < kern.kernel_to_input.size(); ++i)
      to_local[kern.kernel_to_input[i]] = static_cast<int>(i);
    VertexCover local_cover;
    for (Vertex c : result.cover.vertices) local_cover.vertices.push_back(to_local[c]);
    auto solved = solve_kernel(kern.kernel, local_cover, h);
    if (!solved) return std::nullopt;
    return std::make_pair(std::move(kern), std::move(*solved));
  };

  int lo = 1, hi = tau;
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (probe(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  int h = lo;
  auto final_probe = probe(h);
  if (!final_probe)
    throw InternalError("a layout with as many queues as the cover size must exist");
  result.queue_number = h;

  const VcKernel& kern = final_probe->first;
  const LinearLayout& kernel_layout = final_probe->second;

  // lift: translate the kernel layout to input ids and reinsert the trimmed
  // vertices in reverse order, one induced subgraph at a time
  std::vector<Vertex> order;
  order.reserve(g.vertex_count());
  for (Vertex v : kernel_layout.order) order.push_back(kern.kernel_to_input[v]);
  std::unordered_map<Edge, int, EdgeHash> sigma;
  for (int e = 0; e < kern.kernel.edge_count(); ++e) {
    const auto& [a, b] = kern.kernel.edges()[e];
    sigma[make_edge(kern.kernel_to_input[a], kern.kernel_to_input[b])] =
        kernel_layout.queues[e];
  }

  VertexSet alive = kern.kernel_to_input;
  for (auto it = kern.trimmed.rbegin(); it != kern.trimmed.rend(); ++it) {
    Vertex v = it->vertex;
    VertexSet next_alive = set_union(alive, {v});
    Subgraph cur = induced_subgraph(g, next_alive);
    std::vector<int> to_local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < cur.to_host.size(); ++i)
      to_local[cur.to_host[i]] = static_cast<int>(i);

    VertexCover local_cover;
    for (Vertex c : result.cover.vertices) local_cover.vertices.push_back(to_local[c]);
    std::sort(local_cover.vertices.begin(), local_cover.vertices.end());

    // the graph without v, in next_alive-local ids, equals the previous
    // alive graph; rebuild its layout from the running order and queues
    Subgraph prev = induced_subgraph(g, alive);
    LinearLayout without;
    without.num_queues = h;
    without.order.reserve(order.size());
    std::vector<int> prev_local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < prev.to_host.size(); ++i)
      prev_local[prev.to_host[i]] = static_cast<int>(i);
    for (Vertex w : order) without.order.push_back(prev_local[w]);
    without.queues.resize(prev.graph.edge_count());
    for (int e = 0; e < prev.graph.edge_count(); ++e) {
      const auto& [a, b] = prev.graph.edges()[e];
      without.queues[e] = sigma.at(make_edge(prev.to_host[a], prev.to_host[b]));
    }

    LinearLayout lifted = reinsert_vertex(cur.graph, local_cover, to_local[v], without);

    order.clear();
    for (Vertex w : lifted.order) order.push_back(cur.to_host[w]);
    sigma.clear();
    for (int e = 0; e < cur.graph.edge_count(); ++e) {
      const auto& [a, b] = cur.graph.edges()[e];
      sigma[make_edge(cur.to_host[a], cur.to_host[b])] = lifted.queues[e];
    }
    alive = std::move(next_alive);
  }

  result.layout.order = std::move(order);
  result.layout.queues.resize(g.edge_count());
  int max_label = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& [a, b] = g.edges()[e];
    result.layout.queues[e] = sigma.at(make_edge(a, b));
    max_label = std::max(max_label, result.layout.queues[e]);
  }
  result.layout.num_queues = max_label;

  ValidationResult check = validate_layout(g, result.layout);
  if (!check) throw InternalError("lifted layout failed validation: " + check.detail);
  return result;
}

}  // namespace qlayout::vc
