#include "qlayout/td_kernel.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qlayout/errors.hpp"

namespace qlayout::td {

namespace {

// Components of g minus (path of t, plus `exclude`) that contain a tree
// child of t under `parent`.
std::vector<AnchoredComponent> components_at(const Graph& g,
                                             const std::vector<Vertex>& parent, Vertex t,
                                             const VertexSet& exclude) {
  VertexSet path;
  for (Vertex v = t; v != -1; v = parent[v]) path.push_back(v);
  std::sort(path.begin(), path.end());

  std::vector<char> blocked(g.vertex_count(), 0);
  for (Vertex v : path) blocked[v] = 1;
  for (Vertex v : exclude) blocked[v] = 1;

  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<AnchoredComponent> out;
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    if (blocked[start] || seen[start]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!blocked[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    bool anchored = std::any_of(comp.begin(), comp.end(),
                                [&](Vertex v) { return parent[v] == t; });
    if (!anchored) continue;

    AnchoredComponent c;
    c.anchor = t;
    c.ancestor_path = path;
    c.vertices = std::move(comp);
    for (Vertex v : c.vertices) {
      VertexSet att;
      for (Vertex w : g.neighbors(v)) {
        if (set_contains(path, w)) att.push_back(w);
        if (w > v && set_contains(c.vertices, w)) c.internal_edges.emplace_back(v, w);
      }
      c.attachments.emplace(v, std::move(att));
    }
    std::sort(c.internal_edges.begin(), c.internal_edges.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const AnchoredComponent& a, const AnchoredComponent& b) {
              return a.vertices.front() < b.vertices.front();
            });
  return out;
}

}  // namespace

Decomposition decompose_at(const Graph& g, const TreedepthDecomposition& T, Vertex t) {
  if (t < 0 || t >= g.vertex_count()) throw std::invalid_argument("anchor out of range");
  Decomposition d;
  d.components = components_at(g, T.parent, t, {});
  for (const auto& c : d.components)
    d.max_size = std::max(d.max_size, static_cast<int>(c.vertices.size()));
  return d;
}

ComponentSignature component_signature(const AnchoredComponent& c, int cap) {
  int s = static_cast<int>(c.vertices.size());
  if (s > cap)
    throw CapacityError("component of " + std::to_string(s) +
                        " vertices exceeds the canonicalization cap of " +
                        std::to_string(cap) +
                        "; review the threshold configuration");

  std::vector<VertexSet> att(s);
  for (int i = 0; i < s; ++i) att[i] = c.attachments.at(c.vertices[i]);
  std::vector<Edge> local_edges;
  local_edges.reserve(c.internal_edges.size());
  auto local_of = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(c.vertices.begin(), c.vertices.end(), v) -
                            c.vertices.begin());
  };
  for (const auto& [u, v] : c.internal_edges)
    local_edges.push_back(make_edge(local_of(u), local_of(v)));

  ComponentSignature best;
  best.size = s;
  std::vector<int> perm(s);  // local index -> template index
  std::iota(perm.begin(), perm.end(), 0);
  bool first = true;
  do {
    std::vector<Edge> edges;
    edges.reserve(local_edges.size());
    for (const auto& [a, b] : local_edges) edges.push_back(make_edge(perm[a], perm[b]));
    std::sort(edges.begin(), edges.end());
    std::vector<VertexSet> templ_att(s);
    for (int i = 0; i < s; ++i) templ_att[perm[i]] = att[i];

    if (first || edges < best.edges ||
        (edges == best.edges && templ_att < best.attachments)) {
      best.edges = std::move(edges);
      best.attachments = std::move(templ_att);
      best.canonical_order.assign(s, -1);
      for (int i = 0; i < s; ++i) best.canonical_order[perm[i]] = c.vertices[i];
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::optional<PruneOutcome> prune_once(const Graph& g, const TreedepthDecomposition& T,
                                       Vertex t, int level, const Thresholds& thresholds,
                                       int signature_cap) {
  if (level < 2) throw std::invalid_argument("pruning levels start at 2");
  int k = T.height;
  if (level > k) return std::nullopt;

  Decomposition d = decompose_at(g, T, t);
  if (d.components.empty()) return std::nullopt;
  auto count = static_cast<std::int64_t>(d.components.size());
  if (thresholds.compare_children(k, level, count) > 0) return std::nullopt;
  if (thresholds.compare_size(k, level, d.max_size) < 0) return std::nullopt;

  // every strict descendant must itself be below the previous level's bound;
  // childless descendants anchor nothing and can be skipped outright
  std::vector<char> has_child(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (T.parent[v] != -1) has_child[T.parent[v]] = 1;
  for (Vertex q = 0; q < g.vertex_count(); ++q) {
    if (q == t || !has_child[q]) continue;
    bool descendant = false;
    for (Vertex a = T.parent[q]; a != -1; a = T.parent[a])
      if (a == t) {
        descendant = true;
        break;
      }
    if (!descendant) continue;
    auto cnt = static_cast<std::int64_t>(components_at(g, T.parent, q, {}).size());
    if (thresholds.compare_children(k, level - 1, cnt) < 0) return std::nullopt;
  }

  std::map<ComponentSignature, std::vector<int>> classes;
  for (std::size_t i = 0; i < d.components.size(); ++i)
    classes[component_signature(d.components[i], signature_cap)].push_back(
        static_cast<int>(i));

  std::int64_t required = thresholds.required_class_size(k, level, count);
  for (const auto& [sig, members] : classes) {
    if (static_cast<std::int64_t>(members.size()) < required) continue;
    // members with smaller minimum vertex id come first by construction
    const AnchoredComponent& b = d.components[members.front()];
    Subgraph reduced = remove_vertices(g, b.vertices);
    return PruneOutcome{b, members.size(), std::move(reduced.graph),
                        std::move(reduced.to_host)};
  }
  return std::nullopt;
}

namespace {

TreedepthDecomposition restrict_decomposition(const TreedepthDecomposition& T,
                                              const VertexSet& keep) {
  std::vector<int> local(T.parent.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);
  TreedepthDecomposition out;
  out.parent.assign(keep.size(), -1);
  out.depth.assign(keep.size(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    Vertex a = T.parent[keep[i]];
    while (a != -1 && local[a] == -1) a = T.parent[a];
    out.parent[i] = a == -1 ? -1 : local[a];
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    int d = 0;
    for (int a = static_cast<int>(i); a != -1; a = out.parent[a]) ++d;
    out.depth[i] = d;
    out.height = std::max(out.height, d);
  }
  return out;
}

}  // namespace

KernelizeResult kernelize(const Graph& g, const Thresholds& thresholds, int signature_cap,
                          const TreedepthDecomposition* deco) {
  if (!is_connected(g))
    throw std::invalid_argument("kernelization requires a connected graph");

  TreedepthDecomposition T;
  if (deco != nullptr) {
    std::string bad = deco->why_invalid(g);
    if (!bad.empty()) throw std::invalid_argument("invalid decomposition: " + bad);
    T = *deco;
  } else {
    T = *compute_treedepth(g, g.vertex_count());
  }

  KernelizeResult result;
  result.height = T.height;
  Graph cur = g;
  VertexSet to_input(g.vertex_count());
  std::iota(to_input.begin(), to_input.end(), 0);

  for (;;) {
    int k = T.height;
    bool fired = false;
    for (int d = k - 1; d >= 1 && !fired; --d) {
      int level = k - d + 1;
      for (Vertex t = 0; t < cur.vertex_count() && !fired; ++t) {
        if (T.depth[t] != d) continue;
        auto outcome = prune_once(cur, T, t, level, thresholds, signature_cap);
        if (!outcome) continue;

        RemovalRecord rec;
        rec.anchor = to_input[t];
        rec.level = level;
        rec.class_size = outcome->class_size;
        for (Vertex v : outcome->removed.vertices) rec.removed.push_back(to_input[v]);
        std::sort(rec.removed.begin(), rec.removed.end());
        rec.alive_before = to_input;
        rec.parent_before.assign(g.vertex_count(), -1);
        for (Vertex v = 0; v < cur.vertex_count(); ++v)
          rec.parent_before[to_input[v]] =
              T.parent[v] == -1 ? -1 : to_input[T.parent[v]];
        result.log.push_back(std::move(rec));

        T = restrict_decomposition(T, outcome->reduced_to_host);
        VertexSet next_to_input(outcome->reduced_to_host.size());
        for (std::size_t i = 0; i < outcome->reduced_to_host.size(); ++i)
          next_to_input[i] = to_input[outcome->reduced_to_host[i]];
        to_input = std::move(next_to_input);
        cur = std::move(outcome->reduced);
        fired = true;
      }
    }
    if (!fired) break;
  }
  result.kernel = std::move(cur);
  result.kernel_to_input = std::move(to_input);
  return result;
}

// ---- layout extension -------------------------------------------------------

namespace {

struct Interval {
  int lo, hi;
};

Interval segment_of(const std::vector<int>& position, const PlacedComponent& c, int tv,
                    int tw) {
  int a = position[c.by_template[tv]];
  int b = position[c.by_template[tw]];
  return {std::min(a, b), std::max(a, b)};
}

bool disjoint(Interval a, Interval b) { return a.hi < b.lo || b.hi < a.lo; }
bool contains(Interval outer, Interval inner) {
  return outer.lo < inner.lo && inner.hi < outer.hi;
}

}  // namespace

PairClass classify_pair(const std::vector<int>& position, const PlacedComponent& a,
                        const PlacedComponent& b, int tv, int tw, bool vw_is_edge) {
  int av = position[a.by_template[tv]], aw = position[a.by_template[tw]];
  int bv = position[b.by_template[tv]], bw = position[b.by_template[tw]];
  if ((av < aw) != (bv < bw))
    throw std::invalid_argument(
        "segment endpoints ordered differently; components are not order-equivalent");
  Interval ia{std::min(av, aw), std::max(av, aw)};
  Interval ib{std::min(bv, bw), std::max(bv, bw)};
  if (disjoint(ia, ib)) return PairClass::separate;
  if (contains(ia, ib) || contains(ib, ia)) {
    if (vw_is_edge)
      throw InternalError(
          "counterpart edges nest; the layout is not a valid 1-queue layout of "
          "equivalent components");
    return PairClass::nesting;
  }
  return PairClass::interleaving;
}

DSequence build_dsequence(const std::vector<int>& position,
                          const std::vector<PlacedComponent>& group, int tv, int tw) {
  int m = static_cast<int>(group.size());
  std::vector<int> vpos(m);
  std::vector<Interval> seg(m);
  for (int i = 0; i < m; ++i) {
    vpos[i] = position[group[i].by_template[tv]];
    seg[i] = segment_of(position, group[i], tv, tw);
  }

  DSequence ds;
  ds.assignment.assign(m, -1);
  int first = static_cast<int>(std::min_element(vpos.begin(), vpos.end()) - vpos.begin());
  ds.chain.push_back(first);
  for (;;) {
    int last = ds.chain.back();
    int next = -1;
    for (int i = 0; i < m; ++i) {
      if (vpos[i] <= vpos[last] || !disjoint(seg[i], seg[last])) continue;
      if (next == -1 || vpos[i] < vpos[next]) next = i;
    }
    if (next == -1) break;
    ds.chain.push_back(next);
  }
  for (std::size_t l = 0; l < ds.chain.size(); ++l) ds.assignment[ds.chain[l]] = static_cast<int>(l);
  for (int i = 0; i < m; ++i) {
    if (ds.assignment[i] != -1) continue;
    int best = -1;
    for (std::size_t l = 0; l < ds.chain.size(); ++l) {
      if (vpos[ds.chain[l]] >= vpos[i]) continue;
      if (best == -1 || vpos[ds.chain[l]] > vpos[ds.chain[best]]) best = static_cast<int>(l);
    }
    ds.assignment[i] = best;  // the first element is leftmost, so best >= 0
  }
  return ds;
}

std::optional<std::pair<int, int>> find_delimiting_pair(
    const std::vector<int>& position, const std::vector<PlacedComponent>& group,
    const std::vector<Edge>& template_edges) {
  int m = static_cast<int>(group.size());
  if (m < 2) return std::nullopt;

  std::vector<std::vector<int>> key(m);
  for (const auto& [tv, tw] : template_edges) {
    DSequence ds = build_dsequence(position, group, tv, tw);
    for (int i = 0; i < m; ++i) key[i].push_back(ds.assignment[i]);
  }

  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (key[i] != key[j]) continue;
      int left = i, right = j;
      if (position[group[j].by_template[0]] < position[group[i].by_template[0]])
        std::swap(left, right);
      for (std::size_t t = 0; t < group[i].by_template.size(); ++t)
        if (position[group[left].by_template[t]] >=
            position[group[right].by_template[t]])
          throw InternalError(
              "counterpart orientation flips between equivalent components; the "
              "input layout cannot be a valid 1-queue layout");
      return std::make_pair(left, right);
    }
  return std::nullopt;
}

std::vector<std::vector<Vertex>> blocks_of(const Graph& g, const std::vector<int>& position,
                                           const PlacedComponent& x,
                                           const PlacedComponent& y) {
  int s = static_cast<int>(x.vertices.size());
  std::vector<Vertex> members = x.vertices;
  std::sort(members.begin(), members.end(),
            [&](Vertex a, Vertex b) { return position[a] < position[b]; });

  std::vector<int> template_of(g.vertex_count(), -1);
  for (std::size_t t = 0; t < x.by_template.size(); ++t) template_of[x.by_template[t]] = static_cast<int>(t);
  auto counterpart = [&](Vertex v) { return y.by_template[template_of[v]]; };

  for (Vertex v : members)
    if (position[v] >= position[counterpart(v)])
      throw InternalError(
          "a vertex sits right of its counterpart; delimiting orientation violated");

  auto has_left = [&](Vertex v) {
    for (Vertex w : g.neighbors(v))
      if (position[w] != -1 && position[w] < position[v]) return true;
    return false;
  };
  auto has_right = [&](Vertex v) {
    for (Vertex w : g.neighbors(v))
      if (position[w] != -1 && position[w] > position[v]) return true;
    return false;
  };

  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cur;
  int min_cp = 0;
  int left_count = 0, right_count = 0;
  Vertex left_single = -1, right_single = -1;

  auto open_block = [&](Vertex v) {
    cur = {v};
    min_cp = position[counterpart(v)];
    left_count = has_left(v) ? 1 : 0;
    right_count = has_right(v) ? 1 : 0;
    left_single = left_count ? v : -1;
    right_single = right_count ? v : -1;
  };

  open_block(members[0]);
  for (int idx = 1; idx < s; ++idx) {
    Vertex v = members[idx];
    bool l = has_left(v), r = has_right(v);
    int nl = left_count + (l ? 1 : 0);
    int nr = right_count + (r ? 1 : 0);
    Vertex nls = l ? v : left_single;
    Vertex nrs = r ? v : right_single;
    // (1) no counterpart of a member strictly inside the widened span;
    // (2) no two distinct members with neighbors on opposite sides
    bool cond1 = min_cp > position[v];
    bool cond2 = nl == 0 || nr == 0 || (nl == 1 && nr == 1 && nls == nrs);
    if (cond1 && cond2) {
      cur.push_back(v);
      min_cp = std::min(min_cp, position[counterpart(v)]);
      left_count = nl;
      right_count = nr;
      left_single = nls;
      right_single = nrs;
    } else {
      blocks.push_back(std::move(cur));
      open_block(v);
    }
  }
  blocks.push_back(std::move(cur));
  return blocks;
}

LinearLayout extend_layout(const Graph& g, const std::vector<Vertex>& order_without,
                           const AnchoredComponent& removed,
                           const std::vector<Vertex>& removed_by_template,
                           const PlacedComponent& x, const PlacedComponent& y) {
  if (order_without.size() + removed.vertices.size() !=
      static_cast<std::size_t>(g.vertex_count()))
    throw std::invalid_argument("order does not match graph minus removed component");

  std::vector<int> position(g.vertex_count(), -1);
  for (std::size_t p = 0; p < order_without.size(); ++p)
    position[order_without[p]] = static_cast<int>(p);

  std::vector<int> template_of(g.vertex_count(), -1);
  for (std::size_t t = 0; t < x.by_template.size(); ++t)
    template_of[x.by_template[t]] = static_cast<int>(t);

  auto blocks = blocks_of(g, position, x, y);

  // the run mirroring a block is injected right before the counterpart (in
  // y) of the block's first member
  std::vector<std::vector<Vertex>> pending(g.vertex_count());
  for (const auto& block : blocks) {
    Vertex anchor_vertex = y.by_template[template_of[block.front()]];
    std::vector<Vertex> run;
    run.reserve(block.size());
    for (Vertex v : block) run.push_back(removed_by_template[template_of[v]]);
    pending[anchor_vertex] = std::move(run);
  }

  LinearLayout out;
  out.order.reserve(g.vertex_count());
  for (Vertex v : order_without) {
    for (Vertex b : pending[v]) out.order.push_back(b);
    out.order.push_back(v);
  }
  out.queues.assign(g.edge_count(), 1);
  out.num_queues = g.edge_count() > 0 ? 1 : 0;

  ValidationResult check = validate_layout(g, out);
  if (!check)
    throw InternalError("extended order is not a valid 1-queue layout: " +
                        (check.detail.empty() ? "nesting pair in queue " +
                                                    std::to_string(check.queue)
                                              : check.detail));
  return out;
}

std::optional<LinearLayout> try_reinsert(const Graph& g, const std::vector<Vertex>& parent,
                                         const AnchoredComponent& removed,
                                         const std::vector<Vertex>& order_without,
                                         int signature_cap) {
  ComponentSignature target = component_signature(removed, signature_cap);

  auto all = components_at(g, parent, removed.anchor, removed.vertices);
  std::vector<PlacedComponent> placed;
  for (auto& cand : all) {
    if (static_cast<int>(cand.vertices.size()) != target.size) continue;
    ComponentSignature sig = component_signature(cand, signature_cap);
    if (sig == target)
      placed.push_back(PlacedComponent{cand.vertices, sig.canonical_order});
  }
  if (placed.size() < 2) return std::nullopt;

  std::vector<int> position(g.vertex_count(), -1);
  for (std::size_t p = 0; p < order_without.size(); ++p)
    position[order_without[p]] = static_cast<int>(p);

  // group equivalent components by the arrangement of their vertices
  // relative to the ancestor path
  using Pattern = std::vector<std::pair<int, int>>;
  auto pattern_of = [&](const PlacedComponent& c) {
    Pattern tokens;
    for (Vertex v : removed.ancestor_path) tokens.emplace_back(position[v], 0);
    for (std::size_t t = 0; t < c.by_template.size(); ++t)
      tokens.emplace_back(position[c.by_template[t]], 1 + static_cast<int>(t));
    std::sort(tokens.begin(), tokens.end());
    Pattern key;
    key.reserve(tokens.size());
    for (auto& [pos, tag] : tokens)
      key.emplace_back(tag, tag == 0 ? order_without[pos] : 0);
    return key;
  };

  std::map<Pattern, std::vector<int>> groups;
  for (std::size_t i = 0; i < placed.size(); ++i)
    groups[pattern_of(placed[i])].push_back(static_cast<int>(i));

  for (const auto& [pattern, members] : groups) {
    if (members.size() < 2) continue;
    std::vector<PlacedComponent> group;
    group.reserve(members.size());
    for (int i : members) group.push_back(placed[i]);
    auto pair = find_delimiting_pair(position, group, target.edges);
    if (!pair) continue;
    return extend_layout(g, order_without, removed, target.canonical_order,
                         group[pair->first], group[pair->second]);
  }
  return std::nullopt;
}

namespace {

// Lexicographically first vertex order admitting a single queue, by
// backtracking with early rejection of any prefix that already contains a
// nesting pair.
struct OneQueueSearch {
  const Graph& g;
  std::vector<Vertex> order;
  std::vector<char> used;
  std::vector<std::pair<int, int>> complete;  // position intervals of placed edges
  std::vector<int> position;

  explicit OneQueueSearch(const Graph& graph)
      : g(graph), used(graph.vertex_count(), 0), position(graph.vertex_count(), -1) {}

  bool run() { return place(0); }

  bool place(int p) {
    if (p == g.vertex_count()) return true;
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
        complete.push_back(e);
        ++added;
      }
      if (ok) {
        used[v] = 1;
        position[v] = p;
        order.push_back(v);
        if (place(p + 1)) return true;
        order.pop_back();
        position[v] = -1;
        used[v] = 0;
      }
      complete.resize(complete.size() - added);
    }
    return false;
  }
};

std::optional<std::vector<Vertex>> find_one_queue_order(const Graph& g) {
  OneQueueSearch search(g);
  if (!search.run()) return std::nullopt;
  return search.order;
}

}  // namespace

DecideResult decide_one_queue(const Graph& g, const Thresholds& thresholds, int brute_cap,
                              int signature_cap, const TreedepthDecomposition* deco) {
  DecideResult result;
  result.kernelization = kernelize(g, thresholds, signature_cap, deco);
  const KernelizeResult& K = result.kernelization;

  if (K.kernel.vertex_count() > brute_cap)
    throw CapacityError(
        "kernel has " + std::to_string(K.kernel.vertex_count()) +
        " vertices, above the brute-force cap of " + std::to_string(brute_cap) +
        "; use synthetic thresholds or raise the cap");

  auto kernel_order = find_one_queue_order(K.kernel);
  if (!kernel_order) return result;  // one_queue == false
  result.one_queue = true;

  std::vector<Vertex> order;
  order.reserve(kernel_order->size());
  for (Vertex v : *kernel_order) order.push_back(K.kernel_to_input[v]);

  for (auto it = K.log.rbegin(); it != K.log.rend(); ++it) {
    const RemovalRecord& rec = *it;
    Subgraph sub = induced_subgraph(g, rec.alive_before);
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < sub.to_host.size(); ++i)
      local[sub.to_host[i]] = static_cast<int>(i);

    std::vector<Vertex> parent_local(sub.graph.vertex_count(), -1);
    for (Vertex v = 0; v < sub.graph.vertex_count(); ++v) {
      Vertex ph = rec.parent_before[sub.to_host[v]];
      parent_local[v] = ph == -1 ? -1 : local[ph];
    }

    VertexSet removed_local;
    for (Vertex v : rec.removed) removed_local.push_back(local[v]);
    std::sort(removed_local.begin(), removed_local.end());

    auto removed_comps =
        components_at(sub.graph, parent_local, local[rec.anchor], {});
    const AnchoredComponent* removed = nullptr;
    for (const auto& c : removed_comps)
      if (c.vertices == removed_local) {
        removed = &c;
        break;
      }
    if (removed == nullptr)
      throw InternalError("removal log does not match the graph it was taken from");

    std::vector<Vertex> order_local;
    order_local.reserve(order.size());
    for (Vertex v : order) order_local.push_back(local[v]);

    auto extended =
        try_reinsert(sub.graph, parent_local, *removed, order_local, signature_cap);
    if (!extended) {
      // bracketing structure absent under this layout; recover a witness by
      // direct search over the input graph
      if (g.vertex_count() > brute_cap)
        throw CapacityError(
            "witness recovery needs a direct order search but the graph has " +
            std::to_string(g.vertex_count()) + " vertices, above the cap of " +
            std::to_string(brute_cap));
      auto direct = find_one_queue_order(g);
      if (!direct)
        throw InternalError(
            "kernel admits one queue but the input graph does not; the synthetic "
            "thresholds are unsound for this input");
      order = *direct;
      result.used_fallback = true;
      break;
    }
    order.clear();
    for (Vertex v : extended->order) order.push_back(sub.to_host[v]);
  }

  LinearLayout layout;
  layout.order = std::move(order);
  layout.queues.assign(g.edge_count(), 1);
  layout.num_queues = g.edge_count() > 0 ? 1 : 0;
  ValidationResult check = validate_layout(g, layout);
  if (!check)
    throw InternalError("lifted layout failed validation: " + check.detail);
  result.layout = std::move(layout);
  return result;
}

}  // namespace qlayout::td
