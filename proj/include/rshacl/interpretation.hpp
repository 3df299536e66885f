// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RSHACL_INTERPRETATION_HPP
#define RSHACL_INTERPRETATION_HPP

#include <cstddef>
#include <vector>

#include "rshacl/errors.hpp"
#include "rshacl/relation.hpp"
#include "rshacl/truth.hpp"

namespace rshacl {

using ShapeId = std::uint32_t;

/// Two-valued interpretation of the shape names: one node set per shape,
/// positional over a fixed vocabulary and domain.
class ShapeAssignment {
 public:
  ShapeAssignment() = default;
  ShapeAssignment(std::size_t shape_count, std::size_t domain_size)
      : domain_size_(domain_size), sets_(shape_count, NodeSet(domain_size)) {}

  static ShapeAssignment bottom(std::size_t shapes, std::size_t domain) {
    return ShapeAssignment(shapes, domain);
  }

  static ShapeAssignment top(std::size_t shapes, std::size_t domain) {
    ShapeAssignment a(shapes, domain);
    for (auto& s : a.sets_) s.set();
    return a;
  }

  std::size_t shape_count() const { return sets_.size(); }
  std::size_t domain_size() const { return domain_size_; }

  const NodeSet& at(ShapeId s) const { return sets_[s]; }
  NodeSet& at(ShapeId s) { return sets_[s]; }

  bool contains(ShapeId s, NodeId a) const { return sets_[s].test(a); }

  bool operator==(const ShapeAssignment& other) const {
    return domain_size_ == other.domain_size_ && sets_ == other.sets_;
  }

  /// Arbitrary total order; used only to canonicalize model listings.
  bool operator<(const ShapeAssignment& other) const {
    return sets_ < other.sets_;
  }

 private:
  std::size_t domain_size_ = 0;
  std::vector<NodeSet> sets_;
};

inline void require_same_shape(const ShapeAssignment& a,
                               const ShapeAssignment& b) {
  if (a.shape_count() != b.shape_count() ||
      a.domain_size() != b.domain_size())
    throw VocabularyError("shape assignments over different vocabularies");
}

/// Pointwise truth order: a <=_t b iff a(s) is a subset of b(s) for all s.
inline bool assignment_leq_t(const ShapeAssignment& a,
                             const ShapeAssignment& b) {
  require_same_shape(a, b);
  for (ShapeId s = 0; s < a.shape_count(); ++s)
    if (!a.at(s).is_subset_of(b.at(s))) return false;
  return true;
}

/// A consistent pair (lower, upper) of assignments, read as a three-valued
/// interpretation: true on lower, false off upper, unknown in between.
class PartialInterpretation {
 public:
  PartialInterpretation() = default;
  PartialInterpretation(ShapeAssignment lower, ShapeAssignment upper)
      : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (!assignment_leq_t(lower_, upper_))
      throw VocabularyError(
          "inconsistent pair: lower bound not below upper bound");
  }

  static PartialInterpretation least_precise(std::size_t shapes,
                                             std::size_t domain) {
    return PartialInterpretation(ShapeAssignment::bottom(shapes, domain),
                                 ShapeAssignment::top(shapes, domain));
  }

  const ShapeAssignment& lower() const { return lower_; }
  const ShapeAssignment& upper() const { return upper_; }

  std::size_t shape_count() const { return lower_.shape_count(); }
  std::size_t domain_size() const { return lower_.domain_size(); }

  TruthValue value(ShapeId s, NodeId a) const {
    if (lower_.contains(s, a)) return TruthValue::True;
    if (!upper_.contains(s, a)) return TruthValue::False;
    return TruthValue::Unknown;
  }

  bool is_exact() const { return lower_ == upper_; }

  bool operator==(const PartialInterpretation& other) const {
    return lower_ == other.lower_ && upper_ == other.upper_;
  }

  bool operator<(const PartialInterpretation& other) const {
    if (lower_ == other.lower_) return upper_ < other.upper_;
    return lower_ < other.lower_;
  }

 private:
  ShapeAssignment lower_, upper_;
};

/// Precision order: (x1,y1) <=_p (x2,y2) iff x1 <=_t x2 and y2 <=_t y1.
inline bool precision_leq(const PartialInterpretation& a,
                          const PartialInterpretation& b) {
  return assignment_leq_t(a.lower(), b.lower()) &&
         assignment_leq_t(b.upper(), a.upper());
}

/// Embeds a two-valued assignment as the exact pair (a, a).
inline PartialInterpretation exactify(const ShapeAssignment& a) {
  return PartialInterpretation(a, a);
}

inline bool is_exact(const PartialInterpretation& p) { return p.is_exact(); }

}  // namespace rshacl

#endif  // RSHACL_INTERPRETATION_HPP
