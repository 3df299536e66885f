// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RSHACL_TEXTIO_HPP
#define RSHACL_TEXTIO_HPP

#include <string>

#include "rshacl/acorss.hpp"
#include "rshacl/graph.hpp"
#include "rshacl/schema.hpp"
#include "rshacl/snf.hpp"
#include "rshacl/validate.hpp"

namespace rshacl {

/// Parses the line-based graph format: each non-comment line is either
/// `subject predicate object` or `node name`; `#` starts a comment.
Graph parse_graph(const std::string& text,
                  const std::string& filename = "<graph>");

struct ParseOptions {
  /// Accept shape names starting with the reserved "_snf" prefix (used when
  /// reloading printed normal-form schemas).
  bool allow_reserved_names = false;
};

/// Parses the schema DSL (rules `shape NAME := shape-expr ;` and targets
/// `target shape-expr <= NAME ;`).
Schema parse_schema(const std::string& text,
                    const std::string& filename = "<schema>",
                    const ParseOptions& options = {});

/// Checks that every constant mentioned in a nominal exists in the graph;
/// throws EvalError otherwise. Run once after loading a schema/graph pair.
void check_constants(const Schema& schema, const Graph& g);

std::string print_path(const PathExpr& e);
std::string print_shape(const ShapeExpr& e);
std::string print_schema(const Schema& schema);
std::string print_graph(const Graph& g);

/// Renders an assignment as `shape: {a, b}` lines, one shape per line.
std::string print_assignment(const ShapeAssignment& a, const Schema& schema,
                             const Graph& g, const std::string& indent = "");
std::string print_partial(const PartialInterpretation& p,
                          const Schema& schema, const Graph& g,
                          const std::string& indent = "");

// JSON renderings (versioned with a "format": 1 field).
std::string report_to_json(const ValidationReport& report,
                           const Schema& schema, const Graph& g);
std::string models_to_json(const std::vector<ShapeAssignment>& models,
                           SemanticsKind semantics, const Schema& schema,
                           const Graph& g);
std::string comparison_to_json(const SemanticsComparison& cmp,
                               const Schema& schema, const Graph& g);

// Plain-text renderings used by the command-line driver.
std::string report_to_text(const ValidationReport& report,
                           const Schema& schema, const Graph& g);
std::string models_to_text(const std::vector<ShapeAssignment>& models,
                           const Schema& schema, const Graph& g);
std::string comparison_to_text(const SemanticsComparison& cmp,
                               const Schema& schema, const Graph& g);

}  // namespace rshacl

#endif  // RSHACL_TEXTIO_HPP
