#include "qlayout/layout.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "qlayout/errors.hpp"

namespace qlayout {

std::vector<int> positions_of(const Graph& g, const std::vector<Vertex>& order) {
  if (static_cast<int>(order.size()) != g.vertex_count())
    throw std::invalid_argument("order length does not match vertex count");
  std::vector<int> pos(g.vertex_count(), -1);
  for (std::size_t p = 0; p < order.size(); ++p) {
    Vertex v = order[p];
    if (v < 0 || v >= g.vertex_count() || pos[v] != -1)
      throw std::invalid_argument("order is not a permutation of the vertices");
    pos[v] = static_cast<int>(p);
  }
  return pos;
}

bool edges_nest_at(const std::vector<int>& position, Edge a, Edge b) {
  if (a.first == b.first || a.first == b.second || a.second == b.first ||
      a.second == b.second)
    return false;
  int alo = std::min(position[a.first], position[a.second]);
  int ahi = std::max(position[a.first], position[a.second]);
  int blo = std::min(position[b.first], position[b.second]);
  int bhi = std::max(position[b.first], position[b.second]);
  return (alo < blo && bhi < ahi) || (blo < alo && ahi < bhi);
}

bool edges_nest(const std::vector<Vertex>& order, Edge a, Edge b) {
  int n = static_cast<int>(order.size());
  std::vector<int> pos(n, -1);
  for (int p = 0; p < n; ++p) pos[order[p]] = p;
  return edges_nest_at(pos, a, b);
}

ValidationResult validate_layout(const Graph& g, const LinearLayout& l) {
  ValidationResult r;
  std::vector<int> pos;
  try {
    pos = positions_of(g, l.order);
  } catch (const std::invalid_argument& e) {
    r.status = ValidationResult::Status::structural;
    r.detail = e.what();
    return r;
  }
  if (static_cast<int>(l.queues.size()) != g.edge_count()) {
    r.status = ValidationResult::Status::structural;
    r.detail = "queue assignment does not cover the edge set";
    return r;
  }
  for (std::size_t i = 0; i < l.queues.size(); ++i) {
    if (l.queues[i] < 1 || l.queues[i] > std::max(l.num_queues, 1)) {
      r.status = ValidationResult::Status::structural;
      r.detail = "queue index out of range for edge " + std::to_string(i);
      return r;
    }
  }
  if (l.num_queues == 0 && g.edge_count() > 0) {
    r.status = ValidationResult::Status::structural;
    r.detail = "zero queues declared for a graph with edges";
    return r;
  }
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (l.queues[i] != l.queues[j]) continue;
      if (edges_nest_at(pos, edges[i], edges[j])) {
        r.status = ValidationResult::Status::violation;
        r.queue = l.queues[i];
        r.first = edges[i];
        r.second = edges[j];
        return r;
      }
    }
  return r;
}

namespace {

struct IntervalEdge {
  int lo, hi;
  int index;  // into g.edges()
};

// Edges as position intervals, sorted so that potential enclosers precede
// enclosed ones.
std::vector<IntervalEdge> intervals_sorted(const Graph& g, const std::vector<int>& pos) {
  std::vector<IntervalEdge> iv;
  iv.reserve(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& [u, v] = g.edges()[i];
    iv.push_back({std::min(pos[u], pos[v]), std::max(pos[u], pos[v]), i});
  }
  std::sort(iv.begin(), iv.end(), [](const IntervalEdge& a, const IntervalEdge& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi > b.hi;
  });
  return iv;
}

bool strictly_inside(const IntervalEdge& inner, const IntervalEdge& outer) {
  return outer.lo < inner.lo && inner.hi < outer.hi;
}

// chain[i]: length of the longest containment chain starting at iv[i]
// (itself included).
std::vector<int> chain_lengths(const std::vector<IntervalEdge>& iv) {
  std::vector<int> chain(iv.size(), 1);
  for (int i = static_cast<int>(iv.size()) - 1; i >= 0; --i)
    for (std::size_t j = i + 1; j < iv.size(); ++j)
      if (strictly_inside(iv[j], iv[i])) chain[i] = std::max(chain[i], 1 + chain[j]);
  return chain;
}

}  // namespace

Rainbow max_rainbow(const Graph& g, const std::vector<Vertex>& order) {
  Rainbow best;
  if (g.edge_count() == 0) {
    positions_of(g, order);  // still reject malformed orders
    return best;
  }
  auto pos = positions_of(g, order);
  auto iv = intervals_sorted(g, pos);
  auto chain = chain_lengths(iv);
  int depth = *std::max_element(chain.begin(), chain.end());

  // Rebuild the witness greedily: at every step the (lo,hi)-smallest edge
  // that still admits a chain of the required remaining length. iv is
  // sorted by (lo asc, hi desc), which is exactly that order.
  int need = depth;
  int outer = -1;
  for (std::size_t i = 0; i < iv.size() && need > 0; ++i) {
    if (chain[i] < need) continue;
    if (outer >= 0 && !strictly_inside(iv[i], iv[outer])) continue;
    best.edges.push_back(g.edges()[iv[i].index]);
    outer = static_cast<int>(i);
    --need;
  }
  return best;
}

LinearLayout min_queues_for_order(const Graph& g, const std::vector<Vertex>& order) {
  LinearLayout l;
  l.order = order;
  l.queues.assign(g.edge_count(), 0);
  if (g.edge_count() == 0) {
    positions_of(g, order);
    return l;
  }
  auto pos = positions_of(g, order);
  auto iv = intervals_sorted(g, pos);
  auto chain = chain_lengths(iv);
  for (std::size_t i = 0; i < iv.size(); ++i) {
    l.queues[iv[i].index] = chain[i];
    l.num_queues = std::max(l.num_queues, chain[i]);
  }
  return l;
}

std::string layout_to_svg(const Graph& g, const LinearLayout& l) {
  static constexpr std::array<const char*, 10> palette = {
      "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
      "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
  const int step = 60;
  const int margin = 40;
  int n = g.vertex_count();
  auto pos = positions_of(g, l.order);

  int max_span = 0;
  for (const auto& [u, v] : g.edges())
    max_span = std::max(max_span, std::abs(pos[u] - pos[v]));
  int baseline = max_span * step / 2 + margin;
  int width = (n > 0 ? (n - 1) * step : 0) + 2 * margin;
  int height = baseline + margin;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\">\n";
  svg << "  <line x1=\"" << margin - 20 << "\" y1=\"" << baseline << "\" x2=\""
      << width - margin + 20 << "\" y2=\"" << baseline
      << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& [u, v] = g.edges()[i];
    int x1 = margin + std::min(pos[u], pos[v]) * step;
    int x2 = margin + std::max(pos[u], pos[v]) * step;
    double r = (x2 - x1) / 2.0;
    svg << "  <path d=\"M " << x1 << ' ' << baseline << " A " << r << ' ' << r
        << " 0 0 1 " << x2 << ' ' << baseline << "\" fill=\"none\" stroke=\""
        << palette[(l.queues[i] - 1) % palette.size()] << "\" stroke-width=\"2\"/>\n";
  }
  for (int p = 0; p < n; ++p) {
    int x = margin + p * step;
    svg << "  <circle cx=\"" << x << "\" cy=\"" << baseline
        << "\" r=\"5\" fill=\"#222\"/>\n";
    svg << "  <text x=\"" << x << "\" y=\"" << baseline + 22
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">"
        << g.label(l.order[p]) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace qlayout
