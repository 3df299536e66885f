// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RSHACL_TRUTH_HPP
#define RSHACL_TRUTH_HPP

#include <cstdint>
#include <ostream>

namespace rshacl {

/// Three-valued truth constant. The numeric values realize the total
/// truth order False < Unknown < True.
enum class TruthValue : std::uint8_t {
  False = 0,
  Unknown = 1,
  True = 2,
};

constexpr bool truth_leq(TruthValue a, TruthValue b) {
  return static_cast<std::uint8_t>(a) <= static_cast<std::uint8_t>(b);
}

/// Kleene negation: swaps True and False, fixes Unknown.
constexpr TruthValue truth_not(TruthValue v) {
  return static_cast<TruthValue>(2 - static_cast<std::uint8_t>(v));
}

/// Kleene conjunction (minimum in the truth order).
constexpr TruthValue truth_and(TruthValue a, TruthValue b) {
  return truth_leq(a, b) ? a : b;
}

/// Kleene disjunction (maximum in the truth order).
constexpr TruthValue truth_or(TruthValue a, TruthValue b) {
  return truth_leq(a, b) ? b : a;
}

constexpr const char* to_string(TruthValue v) {
  switch (v) {
    case TruthValue::False:
      return "false";
    case TruthValue::Unknown:
      return "unknown";
    default:
      return "true";
  }
}

inline std::ostream& operator<<(std::ostream& os, TruthValue v) {
  return os << to_string(v);
}

}  // namespace rshacl

#endif  // RSHACL_TRUTH_HPP
