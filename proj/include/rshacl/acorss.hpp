// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RSHACL_ACORSS_HPP
#define RSHACL_ACORSS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rshacl/fixpoint.hpp"

namespace rshacl {

/// A level assignment certifying level-mapping stability of a supported
/// model: one natural number per true shape atom. Levels of composite
/// subformulas are derived from these by the connective clauses (and: max,
/// or: min over true disjuncts, geq n: least bound admitting n true
/// successors, forall: max over true successors, everything else: 0).
struct LevelAssignment {
  /// levels[s][a] is meaningful only where the model makes s true at a.
  std::vector<std::vector<std::uint64_t>> levels;
};

/// Pointwise-least level assignment for a supported model, or nullopt if
/// none exists (detected when the ascending iteration exceeds the number of
/// true atoms, which a solvable system never needs). Throws if m is not a
/// supported model.
std::optional<LevelAssignment> minimal_levels(const Schema& schema,
                                              const Graph& g,
                                              const ShapeAssignment& m);

/// True iff m is a supported model admitting a level assignment in which
/// every true head atom sits strictly above its body.
bool is_acorss_stable(const Schema& schema, const Graph& g,
                      const ShapeAssignment& m);

/// Direct re-verification of a candidate: with the given shape-atom levels
/// fixed, does every true head atom sit strictly above its body's derived
/// level?
bool level_assignment_valid(const Schema& schema, const Graph& g,
                            const ShapeAssignment& m,
                            const LevelAssignment& candidate);

struct ModelClassification {
  ShapeAssignment model;
  bool aft_stable = false;
  bool acorss_stable = false;
  /// Evidence when level-mapping stable: the minimal level assignment.
  std::optional<LevelAssignment> levels;
  /// Evidence when not fixpoint-stable: the lower bound the model rebuilds
  /// from below, which then differs from the model itself.
  std::optional<ShapeAssignment> stable_lfp;
};

struct SemanticsComparison {
  bool snf = false;
  std::vector<ModelClassification> models;  // supported models, sorted
  std::size_t supported_count = 0;
  std::size_t aft_stable_count = 0;
  std::size_t acorss_stable_count = 0;
};

/// Enumerates the supported models and classifies each under both stable
/// semantics. Enforces that every fixpoint-stable model is level-mapping
/// stable, and that the two notions coincide on schemas in shape normal
/// form; a violation of either containment is an internal error.
SemanticsComparison compare_semantics(const Schema& schema, const Graph& g,
                                      const EnumLimits& limits = {});

}  // namespace rshacl

#endif  // RSHACL_ACORSS_HPP
