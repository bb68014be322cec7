#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qlayout/errors.hpp"
#include "qlayout/graph.hpp"
#include "qlayout/json_io.hpp"
#include "qlayout/layout.hpp"
#include "qlayout/oracle.hpp"
#include "qlayout/structural.hpp"
#include "qlayout/td_kernel.hpp"
#include "qlayout/vc_kernel.hpp"

namespace {

using namespace qlayout;

// exit codes: 0 ok, 1 negative decision / violation, 2 input error,
// 3 internal self-check failure, 4 capacity exceeded
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitCapacity = 4;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

td::Thresholds parse_thresholds(const std::string& spec) {
  if (spec.empty() || spec == "paper") return td::Thresholds::exact();
  const std::string prefix = "synthetic:";
  if (spec.rfind(prefix, 0) != 0)
    throw ParseError("--thresholds expects 'paper' or 'synthetic:<size>,<children>[;...]'");
  std::vector<std::pair<td::BigInt, td::BigInt>> levels;
  std::istringstream in(spec.substr(prefix.size()));
  std::string chunk;
  while (std::getline(in, chunk, ';')) {
    auto comma = chunk.find(',');
    if (comma == std::string::npos)
      throw ParseError("each synthetic threshold level needs '<size>,<children>'");
    try {
      levels.emplace_back(td::BigInt(chunk.substr(0, comma)),
                          td::BigInt(chunk.substr(comma + 1)));
    } catch (const std::exception&) {
      throw ParseError("synthetic threshold values must be integers");
    }
  }
  if (levels.empty()) throw ParseError("synthetic thresholds need at least one level");
  return td::Thresholds::synthetic_levels(std::move(levels));
}

std::string layout_text(const Graph& g, const LinearLayout& l) {
  std::ostringstream out;
  out << "order:";
  for (Vertex v : l.order) out << ' ' << g.label(v);
  out << '\n';
  for (int q = 1; q <= l.num_queues; ++q) {
    out << "queue " << q << ':';
    for (int e = 0; e < g.edge_count(); ++e)
      if (l.queues[e] == q)
        out << " (" << g.label(g.edges()[e].first) << ',' << g.label(g.edges()[e].second)
            << ')';
    out << '\n';
  }
  return out.str();
}

void emit_layout(const Graph& g, const LinearLayout& l, const std::string& path,
                 const std::string& format) {
  // self-check barrier: nothing invalid ever leaves the process silently
  ValidationResult check = validate_layout(g, l);
  if (!check) throw InternalError("produced layout failed validation: " + check.detail);
  std::string payload;
  if (format == "svg")
    payload = layout_to_svg(g, l);
  else if (format == "text")
    payload = layout_text(g, l);
  else
    payload = layout_to_json(g, l);
  if (path.empty() || path == "-")
    std::cout << payload;
  else
    spill(path, payload);
}

// Solves each connected component separately and concatenates: components
// occupy disjoint stretches of the order, so their edges can share queue
// labels without ever nesting.
struct PerComponent {
  LinearLayout combined;
  int max_queues = 0;
};

template <typename Solve>
PerComponent solve_per_component(const Graph& g, Solve solve) {
  PerComponent out;
  out.combined.queues.assign(g.edge_count(), 1);
  for (const auto& comp : connected_components(g)) {
    Subgraph sub = induced_subgraph(g, comp);
    LinearLayout part = solve(sub.graph);
    for (Vertex v : part.order) out.combined.order.push_back(sub.to_host[v]);
    for (int e = 0; e < sub.graph.edge_count(); ++e) {
      const auto& [a, b] = sub.graph.edges()[e];
      out.combined.queues[g.edge_index(sub.to_host[a], sub.to_host[b])] = part.queues[e];
    }
    out.max_queues = std::max(out.max_queues, part.num_queues);
  }
  out.combined.num_queues = std::max(out.max_queues, g.edge_count() > 0 ? 1 : 0);
  return out;
}

int cmd_qn(const std::string& input, const std::string& output, const std::string& format) {
  Graph g = parse_graph(slurp(input));
  PerComponent solved = solve_per_component(
      g, [](const Graph& comp) { return vc::queue_number(comp).layout; });
  std::cout << "queue number: " << solved.max_queues << '\n';
  if (!output.empty()) emit_layout(g, solved.combined, output, format);
  return kExitOk;
}

int cmd_check(const std::string& graph_path, const std::string& layout_path) {
  Graph g = parse_graph(slurp(graph_path));
  LinearLayout l = layout_from_json(g, slurp(layout_path));
  ValidationResult r = validate_layout(g, l);
  switch (r.status) {
    case ValidationResult::Status::ok:
      std::cout << "ok\n";
      return kExitOk;
    case ValidationResult::Status::violation:
      std::cout << "violation: edges " << g.label(r.first.first) << '-'
                << g.label(r.first.second) << " and " << g.label(r.second.first) << '-'
                << g.label(r.second.second) << " nest in queue " << r.queue << '\n';
      return kExitNegative;
    case ValidationResult::Status::structural:
      std::cerr << "error: " << r.detail << '\n';
      return kExitInput;
  }
  return kExitInternal;
}

int cmd_td1(const std::string& input, const std::string& output, const std::string& format,
            const std::string& thresholds_spec, int brute_cap, bool per_component,
            const std::string& log_path) {
  Graph g = parse_graph(slurp(input));
  td::Thresholds thresholds = parse_thresholds(thresholds_spec);

  auto comps = connected_components(g);
  if (comps.size() > 1 && !per_component)
    throw std::invalid_argument(
        "input is disconnected; pass --per-component to decide each component");

  bool yes = true;
  std::size_t kernel_total = 0;
  std::vector<td::RemovalRecord> full_log;
  LinearLayout combined;
  combined.queues.assign(g.edge_count(), 1);
  combined.num_queues = g.edge_count() > 0 ? 1 : 0;

  for (const auto& comp : comps) {
    Subgraph sub = induced_subgraph(g, comp);
    td::DecideResult r = td::decide_one_queue(sub.graph, thresholds, brute_cap);
    kernel_total += r.kernelization.kernel.vertex_count();
    for (td::RemovalRecord rec : r.kernelization.log) {
      rec.anchor = sub.to_host[rec.anchor];
      for (Vertex& v : rec.removed) v = sub.to_host[v];
      for (Vertex& v : rec.alive_before) v = sub.to_host[v];
      full_log.push_back(std::move(rec));
    }
    if (!r.one_queue) {
      yes = false;
      break;
    }
    for (Vertex v : r.layout->order) combined.order.push_back(sub.to_host[v]);
  }

  std::cout << (yes ? "yes" : "no") << '\n';
  std::cout << "kernel vertices: " << kernel_total << ", removals: " << full_log.size()
            << '\n';
  if (!log_path.empty()) spill(log_path, removal_log_to_json(g, full_log));
  if (!yes) return kExitNegative;
  if (!output.empty()) emit_layout(g, combined, output, format);
  return kExitOk;
}

int cmd_kernel_td(const std::string& input, const std::string& output,
                  const std::string& thresholds_spec) {
  Graph g = parse_graph(slurp(input));
  if (!is_connected(g))
    throw std::invalid_argument("kernelization expects a connected graph");
  td::Thresholds thresholds = parse_thresholds(thresholds_spec);
  auto deco = compute_treedepth(g, g.vertex_count());
  td::KernelizeResult r = td::kernelize(g, thresholds);
  std::cout << "kernel: " << r.kernel.vertex_count() << " vertices, "
            << r.kernel.edge_count() << " edges, " << r.log.size() << " removals\n";
  if (!output.empty()) {
    std::ostringstream doc;
    doc << "{\n\"kernel\": " << graph_to_json(r.kernel)
        << ",\n\"decomposition\": " << decomposition_to_json(g, *deco)
        << ",\n\"removals\": " << removal_log_to_json(g, r.log) << "}\n";
    spill(output, doc.str());
  }
  return kExitOk;
}

int cmd_kernel_vc(const std::string& input, const std::string& output, int h) {
  Graph g = parse_graph(slurp(input));
  auto cover = min_vertex_cover(g, g.vertex_count());
  vc::VcKernel r = vc::build_kernel(g, *cover, h);
  std::cout << "kernel: " << r.kernel.vertex_count() << " vertices, "
            << r.kernel.edge_count() << " edges, " << r.trimmed.size()
            << " trimmed (class cap " << r.class_cap << ")\n";
  if (!output.empty()) {
    std::ostringstream doc;
    doc << "{\n\"kernel\": " << graph_to_json(r.kernel)
        << ",\n\"cover\": " << cover_to_json(g, *cover)
        << ",\n\"h\": " << h << ",\n\"trimmed\": " << trim_log_to_json(g, r.trimmed)
        << "}\n";
    spill(output, doc.str());
  }
  return kExitOk;
}

int cmd_oracle(const std::string& input, const std::string& output,
               const std::string& format, int cap) {
  Graph g = parse_graph(slurp(input));
  OracleResult r = oracle_queue_number(g, cap);
  std::cout << "queue number: " << r.queue_number << " (orders examined: "
            << r.orders_examined << ")\n";
  if (!output.empty()) emit_layout(g, r.layout, output, format);
  return kExitOk;
}

int cmd_render(const std::string& graph_path, const std::string& layout_path,
               const std::string& output) {
  Graph g = parse_graph(slurp(graph_path));
  LinearLayout l = layout_from_json(g, slurp(layout_path));
  ValidationResult r = validate_layout(g, l);
  if (r.status == ValidationResult::Status::structural)
    throw std::invalid_argument(r.detail);
  if (r.status == ValidationResult::Status::violation)
    std::cerr << "warning: layout has a nesting pair in queue " << r.queue << '\n';
  std::string svg = layout_to_svg(g, l);
  if (output.empty() || output == "-")
    std::cout << svg;
  else
    spill(output, svg);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact queue layout toolkit"};
  app.require_subcommand(1);

  std::string input = "-", output, format = "json", graph_path, layout_path, log_path;
  std::string thresholds = "paper";
  int h = 1, oracle_cap = kDefaultOracleCap, brute_cap = td::kDefaultBruteCap;
  int seed = 0;
  bool per_component = false;

  auto add_io = [&](CLI::App* cmd, bool with_format = true) {
    cmd->add_option("input", input, "graph file (edge list or JSON), '-' for stdin");
    cmd->add_option("-o,--output", output, "write the resulting layout here");
    if (with_format)
      cmd->add_option("--format", format, "layout output format")
          ->check(CLI::IsMember({"json", "svg", "text"}));
    cmd->add_option("--seed", seed,
                    "random seed (the solvers are deterministic; accepted for "
                    "interface stability)");
  };

  auto* qn = app.add_subcommand("qn", "minimum number of queues and a witness layout");
  add_io(qn);
  qn->add_flag("--per-component", per_component,
               "solve components separately (always on for qn)");

  auto* check = app.add_subcommand("check", "validate a layout file against a graph");
  check->add_option("graph", graph_path, "graph file")->required();
  check->add_option("layout", layout_path, "layout JSON file")->required();

  auto* td1 = app.add_subcommand("td1", "decide whether the graph needs only one queue");
  add_io(td1);
  td1->add_option("--thresholds", thresholds,
                  "'paper' or 'synthetic:<size>,<children>[;<size>,<children>...]'");
  td1->add_option("--brute-cap", brute_cap, "largest kernel solved by direct search");
  td1->add_flag("--per-component", per_component, "decide each component separately");
  td1->add_option("--log", log_path, "write the removal log here");

  auto* ktd = app.add_subcommand("kernel-td", "one-queue kernelization only");
  add_io(ktd, false);
  ktd->add_option("--thresholds", thresholds,
                  "'paper' or 'synthetic:<size>,<children>[;...]'");

  auto* kvc = app.add_subcommand("kernel-vc", "cover-based kernel for a target h");
  kvc->set_help_flag("--help", "print help");  // frees -h for the queue count
  add_io(kvc, false);
  kvc->add_option("--h,-h", h, "number of queues the kernel is built for")->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force queue number (small graphs)");
  add_io(oracle);
  oracle->add_option("--oracle-cap", oracle_cap, "largest vertex count the oracle accepts");

  auto* render = app.add_subcommand("render", "arc diagram (SVG) of a layout");
  render->add_option("graph", graph_path, "graph file")->required();
  render->add_option("layout", layout_path, "layout JSON file")->required();
  render->add_option("-o,--output", output, "SVG output path, '-' for stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(qn)) return cmd_qn(input, output, format);
    if (app.got_subcommand(check)) return cmd_check(graph_path, layout_path);
    if (app.got_subcommand(td1))
      return cmd_td1(input, output, format, thresholds, brute_cap, per_component, log_path);
    if (app.got_subcommand(ktd)) return cmd_kernel_td(input, output, thresholds);
    if (app.got_subcommand(kvc)) return cmd_kernel_vc(input, output, h);
    if (app.got_subcommand(oracle)) return cmd_oracle(input, output, format, oracle_cap);
    if (app.got_subcommand(render)) return cmd_render(graph_path, layout_path, output);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInternal;
}
