#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qlayout/graph.hpp"
#include "qlayout/layout.hpp"
#include "qlayout/structural.hpp"
#include "qlayout/thresholds.hpp"

namespace qlayout::td {

inline constexpr int kDefaultSignatureCap = 8;
inline constexpr int kDefaultBruteCap = 10;

// One connected component of G - P_t that contains a tree child of the
// anchor t, together with its attachment to the ancestor path P_t.
struct AnchoredComponent {
  Vertex anchor = -1;
  VertexSet ancestor_path;               // ancestors of anchor, anchor included
  VertexSet vertices;                    // component vertices
  std::vector<Edge> internal_edges;      // edges inside the component
  std::map<Vertex, VertexSet> attachments;  // component vertex -> neighbors on the path
};

// Canonical form of a component: vertex count, relabeled internal edges and
// per-position attachment sets, minimized over all relabelings. Two
// components of the same anchor have equal signatures iff some renaming of
// one onto the other preserves both internal adjacency and attachments.
struct ComponentSignature {
  int size = 0;
  std::vector<Edge> edges;               // over template ids 0..size-1
  std::vector<VertexSet> attachments;    // per template id, host path ids
  std::vector<Vertex> canonical_order;   // template id -> component vertex

  friend bool operator==(const ComponentSignature& a, const ComponentSignature& b) {
    return a.size == b.size && a.edges == b.edges && a.attachments == b.attachments;
  }
  friend bool operator<(const ComponentSignature& a, const ComponentSignature& b) {
    if (a.size != b.size) return a.size < b.size;
    if (a.edges != b.edges) return a.edges < b.edges;
    return a.attachments < b.attachments;
  }
};

struct Decomposition {
  std::vector<AnchoredComponent> components;
  int max_size = 0;  // largest component, 0 when there are none
};

// Components of G - P_t containing a tree child of t, plus their maximum
// size. T must be valid for g.
Decomposition decompose_at(const Graph& g, const TreedepthDecomposition& T, Vertex t);

// Throws CapacityError when the component exceeds `cap` vertices (the
// canonicalization enumerates relabelings).
ComponentSignature component_signature(const AnchoredComponent& c,
                                       int cap = kDefaultSignatureCap);

struct PruneOutcome {
  AnchoredComponent removed;
  std::size_t class_size = 0;   // size of the equivalence class the component came from
  Graph reduced;
  VertexSet reduced_to_host;    // reduced id -> id in the pruned graph
};

// Single application of the pruning rule at anchor t with threshold level
// `level`: requires |A_t| >= children(k,level), m_t <= size(k,level) and
// every strict descendant q to satisfy |A_q| <= children(k,level-1); then
// removes one component from an equivalence class of size at least
// children(k,level) / 2^((k+size(k,level))^2). Deterministic choice: the
// class with the smallest signature, in it the component with the smallest
// minimum vertex id. Returns nullopt when the hypotheses do not hold.
std::optional<PruneOutcome> prune_once(const Graph& g, const TreedepthDecomposition& T,
                                       Vertex t, int level, const Thresholds& thresholds,
                                       int signature_cap = kDefaultSignatureCap);

struct RemovalRecord {
  Vertex anchor = -1;        // input-graph id
  int level = 0;             // threshold level the rule fired at
  std::size_t class_size = 0;
  VertexSet removed;         // input-graph ids
  VertexSet alive_before;    // vertices present when the rule fired
  std::vector<Vertex> parent_before;  // decomposition at that moment (input ids)
};

struct KernelizeResult {
  Graph kernel;
  VertexSet kernel_to_input;
  std::vector<RemovalRecord> log;
  int height = 0;  // height of the decomposition of the input
};

// Repeated bottom-up pruning: levels 2..k walking from depth k-1 toward the
// root, restarting after every removal, until no anchor satisfies the
// hypotheses. A decomposition may be supplied to skip the exact treedepth
// computation; it is restricted as vertices are removed.
KernelizeResult kernelize(const Graph& g, const Thresholds& thresholds,
                          int signature_cap = kDefaultSignatureCap,
                          const TreedepthDecomposition* deco = nullptr);

// ---- layout extension -----------------------------------------------------
//
// Machinery reconstructing a 1-queue layout of G from one of G - B after a
// component B was pruned. All of it operates on a fixed order of the graph
// without B, with equivalent components identified through their canonical
// labelings.

// A component situated in a layout: vertex set plus the template-id ->
// vertex map from its canonical labeling.
struct PlacedComponent {
  VertexSet vertices;
  std::vector<Vertex> by_template;
};

enum class PairClass { separate, interleaving, nesting };

// Relation of the (tv,tw) segments of two equivalent placed components:
// disjoint intervals are separate, partially overlapping ones interleave,
// containment nests. If tv-tw is an edge of the template, nesting is
// impossible in a valid 1-queue layout and raises InternalError. Throws
// std::invalid_argument when the segments' endpoint order disagrees
// between the two components.
PairClass classify_pair(const std::vector<int>& position, const PlacedComponent& a,
                        const PlacedComponent& b, int tv, int tw, bool vw_is_edge);

struct DSequence {
  std::vector<int> chain;       // component indices forming the sequence
  std::vector<int> assignment;  // per component, index into chain
};

// The left-to-right sequence of pairwise separate components for one
// template edge, and the assignment of every group member to its sequence
// element.
DSequence build_dsequence(const std::vector<int>& position,
                          const std::vector<PlacedComponent>& group, int tv, int tw);

// Two group members assigned to the same sequence element for every
// template edge (hence interleaving on every edge), oriented so the first
// component lies left of the second, or nullopt. Counterpart orientation
// must be consistent across all template positions; a violation raises
// InternalError since it cannot happen under a valid input layout.
std::optional<std::pair<int, int>> find_delimiting_pair(
    const std::vector<int>& position, const std::vector<PlacedComponent>& group,
    const std::vector<Edge>& template_edges);

// Partition of x's vertices into maximal left-to-right runs such that
// (1) no counterpart (in y) of a run member falls strictly inside the run's
// span and (2) no two distinct members have neighbors on opposite sides.
// g supplies adjacency; x's neighbors must all carry positions.
std::vector<std::vector<Vertex>> blocks_of(const Graph& g, const std::vector<int>& position,
                                           const PlacedComponent& x, const PlacedComponent& y);

// Inserts the removed component into a 1-queue order of g - removed, block
// by block: the members mirroring block i go immediately before the
// counterpart (in y) of the block's first member. The result is validated;
// failure raises InternalError.
LinearLayout extend_layout(const Graph& g, const std::vector<Vertex>& order_without,
                           const AnchoredComponent& removed,
                           const std::vector<Vertex>& removed_by_template,
                           const PlacedComponent& x, const PlacedComponent& y);

// Searches g - removed for an equivalent component pair bracketing the
// removed component and extends the order with it. Returns nullopt when no
// such pair exists under this layout. `parent` is the decomposition in
// force when the removal happened.
std::optional<LinearLayout> try_reinsert(const Graph& g, const std::vector<Vertex>& parent,
                                         const AnchoredComponent& removed,
                                         const std::vector<Vertex>& order_without,
                                         int signature_cap = kDefaultSignatureCap);

struct DecideResult {
  bool one_queue = false;
  std::optional<LinearLayout> layout;  // present iff one_queue
  KernelizeResult kernelization;
  bool used_fallback = false;  // witness recovered by direct search instead of extension
};

// Kernelize, decide by brute force over the kernel's orders, and on yes
// lift the kernel layout back through the removal log in reverse. When the
// bracketing structure is absent at some step (possible with synthetic
// thresholds) the witness is recovered by direct search over the input
// graph's orders; the decision itself is always the kernel's.
DecideResult decide_one_queue(const Graph& g, const Thresholds& thresholds,
                              int brute_cap = kDefaultBruteCap,
                              int signature_cap = kDefaultSignatureCap,
                              const TreedepthDecomposition* deco = nullptr);

}  // namespace qlayout::td
