#pragma once

#include <cstdint>
#include <optional>

#include "qlayout/graph.hpp"
#include "qlayout/layout.hpp"

namespace qlayout {

inline constexpr int kDefaultOracleCap = 10;

// Brute-force ground truth. Deliberately shares nothing with the two
// kernelization pipelines it certifies; it only builds on the fixed-order
// primitives.

struct OracleResult {
  int queue_number = 0;
  LinearLayout layout;
  std::uint64_t orders_examined = 0;
};

// Minimum over all vertex orders of the maximum rainbow size, with a
// witness from the first optimal order in lexicographic enumeration.
// Prefixes already forcing a rainbow at least as large as the best known
// are skipped; exactness is unaffected. Throws CapacityError when the
// graph has more than `cap` vertices.
OracleResult oracle_queue_number(const Graph& g, int cap = kDefaultOracleCap);

struct OracleDecision {
  bool one_queue = false;
  std::optional<LinearLayout> layout;
  std::uint64_t orders_examined = 0;
};

// True iff some vertex order has no two nesting independent edges.
OracleDecision oracle_is_1queue(const Graph& g, int cap = kDefaultOracleCap);

}  // namespace qlayout
