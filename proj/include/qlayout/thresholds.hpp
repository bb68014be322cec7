#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>
#include <vector>

namespace qlayout::td {

using BigInt = boost::multiprecision::cpp_int;

// Pruning thresholds for the one-queue kernelization. The exact mode
// evaluates the recursion
//
//   size(k,1) = children(k,1) = 0
//   size(k,i) = size(k,i-1) * children(k,i-1) + 1
//   children(k,i) = ((2^(k+1)+1)^(size(k,i)^2) + 1) * (size(k,i)+k)!
//                   * 2^((k+size(k,i))^2)
//
// whose values form a tower of exponents in i and overflow any fixed-width
// integer almost immediately. Synthetic mode substitutes user-supplied
// values so the pruning machinery can be exercised (and oracle-verified)
// at desk scale; it is only sound where a test harness confirms the
// decision is preserved.
class Thresholds {
 public:
  static Thresholds exact();
  // One (size, children) pair used for every level i >= 2.
  static Thresholds synthetic(BigInt size_value, BigInt children_value);
  // Per-level pairs for i = 2, 3, ...; the last pair extends upward.
  static Thresholds synthetic_levels(std::vector<std::pair<BigInt, BigInt>> levels);

  bool is_exact() const { return exact_; }

  // Exact values. Throws CapacityError when the value is too large to
  // materialize (guarded big-integer evaluation). i must be in [1, k].
  BigInt size_value(int k, int i) const;
  BigInt children_value(int k, int i) const;

  // Sign of (size(k,i) - v) / (children(k,i) - v), computed without ever
  // materializing tower-sized values: the recursion is evaluated with
  // saturation just above v.
  int compare_size(int k, int i, std::int64_t v) const;
  int compare_children(int k, int i, std::int64_t v) const;

  // Minimum equivalence-class cardinality required for pruning at level i:
  // max(2, ceil(children(k,i) / 2^((k+size(k,i))^2))). `children_upper`
  // must be a known upper bound on children(k,i) (callers verified
  // children(k,i) <= |A_t| before asking).
  std::int64_t required_class_size(int k, int i, std::int64_t children_upper) const;

 private:
  Thresholds() = default;
  bool exact_ = true;
  std::vector<std::pair<BigInt, BigInt>> levels_;  // i = 2, 3, ...

  struct Capped {
    bool over;  // true value exceeds the cap; value then holds the cap
    std::int64_t value;
  };
  Capped size_capped(int k, int i, std::int64_t cap) const;
  Capped children_capped(int k, int i, std::int64_t cap) const;
};

}  // namespace qlayout::td
