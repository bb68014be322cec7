#pragma once

#include <string>

#include "qlayout/graph.hpp"
#include "qlayout/layout.hpp"
#include "qlayout/structural.hpp"
#include "qlayout/td_kernel.hpp"
#include "qlayout/vc_kernel.hpp"

namespace qlayout {

// {"order":[labels...], "queues":{"1":[[a,b],...], ...}}
std::string layout_to_json(const Graph& g, const LinearLayout& l);
// Throws ParseError on malformed documents and std::invalid_argument when
// the layout does not fit the graph (unknown labels, unknown edges).
LinearLayout layout_from_json(const Graph& g, const std::string& text);

// {"parent":{label: label|null, ...}, "height": k}
std::string decomposition_to_json(const Graph& g, const TreedepthDecomposition& t);

// {"cover":[labels]}
std::string cover_to_json(const Graph& g, const VertexCover& c);

// Ordered list of {"anchor":label, "depth":level, "removed":[labels],
// "class_size":N}, labels resolved against the input graph.
std::string removal_log_to_json(const Graph& g, const std::vector<td::RemovalRecord>& log);

// Ordered list of {"vertex":label, "type":[labels]}.
std::string trim_log_to_json(const Graph& g, const std::vector<vc::TrimRecord>& log);

}  // namespace qlayout
