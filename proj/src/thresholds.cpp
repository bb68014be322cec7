#include "qlayout/thresholds.hpp"

#include <stdexcept>

#include "qlayout/errors.hpp"

namespace qlayout::td {

namespace {

using qlayout::CapacityError;

void check_level(int k, int i) {
  if (k < 1 || i < 1 || i > k)
    throw std::invalid_argument("threshold level must satisfy 1 <= i <= k");
}

BigInt factorial(long long n) {
  BigInt f = 1;
  for (long long j = 2; j <= n; ++j) f *= j;
  return f;
}

BigInt pow_bigint(const BigInt& base, const BigInt& exp) {
  BigInt result = 1, b = base, e = exp;
  while (e > 0) {
    if ((e & 1) != 0) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

// Materialization guards: anything past these produces values whose textual
// size alone is unmanageable, so refuse instead of thrashing.
constexpr std::int64_t kMaxSizeForExact = 400;
constexpr int kMaxK = 62;

}  // namespace

Thresholds Thresholds::exact() {
  Thresholds t;
  t.exact_ = true;
  return t;
}

Thresholds Thresholds::synthetic(BigInt size_value, BigInt children_value) {
  return synthetic_levels({{std::move(size_value), std::move(children_value)}});
}

Thresholds Thresholds::synthetic_levels(std::vector<std::pair<BigInt, BigInt>> levels) {
  if (levels.empty()) throw std::invalid_argument("synthetic thresholds need values");
  for (const auto& [s, c] : levels)
    if (s < 0 || c < 0) throw std::invalid_argument("synthetic thresholds must be non-negative");
  Thresholds t;
  t.exact_ = false;
  t.levels_ = std::move(levels);
  return t;
}

BigInt Thresholds::size_value(int k, int i) const {
  check_level(k, i);
  if (i == 1) return 0;
  if (!exact_) return levels_[std::min<std::size_t>(i - 2, levels_.size() - 1)].first;
  if (i == 2) return 1;  // size(k,1) * children(k,1) + 1
  return size_value(k, i - 1) * children_value(k, i - 1) + 1;
}

BigInt Thresholds::children_value(int k, int i) const {
  check_level(k, i);
  if (i == 1) return 0;
  if (!exact_) return levels_[std::min<std::size_t>(i - 2, levels_.size() - 1)].second;
  if (k > kMaxK) throw CapacityError("threshold evaluation limited to k <= 62");
  BigInt s = size_value(k, i);
  if (s > kMaxSizeForExact)
    throw CapacityError(
        "children threshold at this level is a tower value; it cannot be materialized");
  BigInt base = (BigInt(1) << (k + 1)) + 1;
  BigInt power_term = pow_bigint(base, s * s) + 1;
  BigInt fact_term = factorial(static_cast<long long>(s) + k);
  BigInt two_term = BigInt(1) << static_cast<unsigned>((s + k) * (s + k));
  return power_term * fact_term * two_term;
}

Thresholds::Capped Thresholds::size_capped(int k, int i, std::int64_t cap) const {
  check_level(k, i);
  if (i == 1) return {false, 0};
  if (!exact_) {
    const BigInt& v = levels_[std::min<std::size_t>(i - 2, levels_.size() - 1)].first;
    if (v > cap) return {true, cap};
    return {false, static_cast<std::int64_t>(v)};
  }
  if (i == 2) {
    if (cap < 1) return {true, cap};
    return {false, 1};
  }
  Capped s = size_capped(k, i - 1, cap);
  Capped c = children_capped(k, i - 1, cap);
  // both factors are >= 1 for i-1 >= 2, so saturation propagates
  if (s.over || c.over) return {true, cap};
  BigInt v = BigInt(s.value) * c.value + 1;
  if (v > cap) return {true, cap};
  return {false, static_cast<std::int64_t>(v)};
}

Thresholds::Capped Thresholds::children_capped(int k, int i, std::int64_t cap) const {
  check_level(k, i);
  if (i == 1) return {false, 0};
  if (!exact_) {
    const BigInt& v = levels_[std::min<std::size_t>(i - 2, levels_.size() - 1)].second;
    if (v > cap) return {true, cap};
    return {false, static_cast<std::int64_t>(v)};
  }
  if (k > kMaxK) throw CapacityError("threshold evaluation limited to k <= 62");
  // children(k,i) >= 2^((k+size)^2) >= size, so a size overflow is one too
  Capped s = size_capped(k, i, cap);
  if (s.over) return {true, cap};
  // with s modest, evaluate exactly; s^2 factors keep everything bounded
  if (s.value > kMaxSizeForExact) return {true, cap};
  BigInt base = (BigInt(1) << (k + 1)) + 1;
  BigInt exponent = BigInt(s.value) * s.value;
  // quick bit-size estimate before the real power: base >= 2^(k+1)
  BigInt bits_lower = exponent * (k + 1);
  if (bits_lower > 20000) return {true, cap};  // certainly above any int64 cap
  BigInt v = (pow_bigint(base, exponent) + 1) *
             factorial(static_cast<long long>(s.value) + k) *
             (BigInt(1) << static_cast<unsigned>((s.value + k) * (s.value + k)));
  if (v > cap) return {true, cap};
  return {false, static_cast<std::int64_t>(v)};
}

int Thresholds::compare_size(int k, int i, std::int64_t v) const {
  Capped c = size_capped(k, i, v);
  if (c.over) return 1;
  return c.value < v ? -1 : (c.value == v ? 0 : 1);
}

int Thresholds::compare_children(int k, int i, std::int64_t v) const {
  Capped c = children_capped(k, i, v);
  if (c.over) return 1;
  return c.value < v ? -1 : (c.value == v ? 0 : 1);
}

std::int64_t Thresholds::required_class_size(int k, int i, std::int64_t children_upper) const {
  Capped ch = children_capped(k, i, children_upper);
  if (ch.over)
    throw std::invalid_argument("children_upper is not an upper bound for children(k,i)");
  Capped s = size_capped(k, i, 64);
  if (s.over) return 2;  // divisor at least 2^(64^2), quotient is 0
  BigInt divisor = BigInt(1) << static_cast<unsigned>((s.value + k) * (s.value + k));
  BigInt required = (BigInt(ch.value) + divisor - 1) / divisor;
  if (required < 2) return 2;
  return static_cast<std::int64_t>(required);
}

}  // namespace qlayout::td
