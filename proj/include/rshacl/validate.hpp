// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RSHACL_VALIDATE_HPP
#define RSHACL_VALIDATE_HPP

#include <optional>
#include <vector>

#include "rshacl/fixpoint.hpp"

namespace rshacl {

enum class ValidationMode { Brave, Cautious };

const char* to_string(ValidationMode m);
std::optional<ValidationMode> mode_from_string(const std::string& s);

struct TargetResult {
  bool pass = false;
  /// Nodes violating (cautious: possibly violating) the target, in domain
  /// order; empty when passing.
  std::vector<NodeId> witnesses;
  /// For stable/supported semantics: how many models were inspected.
  std::optional<std::uint64_t> models_inspected;
};

struct ValidationReport {
  SemanticsKind semantics;
  ValidationMode mode;
  bool pass = false;
  std::vector<TargetResult> targets;  // in schema order
  /// Evidence: the three-valued model consulted (kk/wf only).
  std::optional<PartialInterpretation> model;
  /// Evidence: a deciding two-valued model (stable/supported only) — the
  /// first passing model on a brave pass, the first failing one on a
  /// cautious fail.
  std::optional<ShapeAssignment> evidence_model;
};

/// Checks every target of the schema against the chosen semantics.
///
/// For kk/wf the target "query <= s" passes cautiously iff "query and not s"
/// is false at every node of the three-valued model, and bravely iff it is
/// nowhere true. For stable/supported it passes cautiously iff no model has
/// a violating node, and bravely iff some model has none; with no models at
/// all, cautious passes vacuously and brave fails.
ValidationReport validate(const Schema& schema, const Graph& g,
                          SemanticsKind semantics, ValidationMode mode,
                          const EnumLimits& limits = {});

}  // namespace rshacl

#endif  // RSHACL_VALIDATE_HPP
