// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RSHACL_SNF_HPP
#define RSHACL_SNF_HPP

#include <string>
#include <vector>

#include "rshacl/schema.hpp"

namespace rshacl {

/// Prefix of auxiliary shape names introduced by to_snf. The schema parser
/// rejects it in user input so fresh names cannot collide.
inline constexpr const char* kSnfPrefix = "_snf";

struct SnfIntroduction {
  std::string fresh;        // the introduced shape name
  std::string source_head;  // head of the original rule it was carved from
};

struct SnfResult {
  Schema schema;
  /// Number of original shape names; they occupy vocabulary indices
  /// [0, original_count) in their original order, fresh names follow.
  std::size_t original_count = 0;
  std::vector<SnfIntroduction> introduced;
};

/// True iff every rule body is a single connective over shape names:
/// top, {c}, not s', s' and s'', s' or s'', geq n (E, s'), forall(E, s'),
/// eq(E, E'), disjoint(E, E'), or closed(Q).
bool is_snf(const Schema& schema);

/// Rewrites the schema into shape normal form by naming every proper
/// subshape with a fresh rule. Targets are kept as-is; original heads keep
/// their names.
SnfResult to_snf(const Schema& schema);

/// Drops all but the first `shape_count` shapes of an assignment (used to
/// restrict models of an SNF schema to the original vocabulary).
ShapeAssignment restrict_assignment(const ShapeAssignment& a,
                                    std::size_t shape_count);

}  // namespace rshacl

#endif  // RSHACL_SNF_HPP
