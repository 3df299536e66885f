// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RSHACL_EVAL_HPP
#define RSHACL_EVAL_HPP

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rshacl/ast.hpp"
#include "rshacl/graph.hpp"
#include "rshacl/interpretation.hpp"

namespace rshacl {

/// Evaluates a path expression to a binary relation over the graph domain.
/// Property names absent from the graph denote the empty relation.
BinaryRelation eval_path(const PathExpr& e, const Graph& g);

/// Lower/upper result of a three-valued set evaluation: lower holds the
/// nodes where the shape is certainly true, upper those where it is
/// possibly true.
struct SetPair {
  NodeSet lower;
  NodeSet upper;
};

/// Caches the graph-only parts of shape evaluation for a fixed set of
/// expressions: path relations, nominal constants, and the shape-free
/// eq/disj/closed node sets. The closed(Q) universe is the union of the
/// graph's property names, the names mentioned in the registered
/// expressions, and any extra names supplied (a schema passes everything it
/// mentions).
class ShapeEvalContext {
 public:
  ShapeEvalContext(const Graph& g, const std::vector<ShapePtr>& exprs,
                   const std::vector<std::string>& extra_props = {});

  const Graph& graph() const { return *graph_; }

  /// Registers another expression after construction (reusing the universe).
  void prepare(const ShapePtr& expr);

  /// Two-valued evaluation of a prepared expression.
  NodeSet eval2(const ShapeExpr& e, const ShapeAssignment& a) const;

  /// Three-valued evaluation of a prepared expression, as a set pair. The
  /// two bounds need not be consistent; on consistent input this realizes
  /// the Kleene truth tables.
  SetPair eval_pair(const ShapeExpr& e, const ShapeAssignment& lower,
                    const ShapeAssignment& upper) const;

  TruthValue eval3(const ShapeExpr& e, const PartialInterpretation& p,
                   NodeId node) const;

  const BinaryRelation& path(const PathExpr& e) const;

  const std::vector<std::string>& property_universe() const {
    return universe_;
  }

 private:
  void prepare_path(const PathPtr& e);
  const NodeSet& atom(const ShapeExpr& e) const;

  const Graph* graph_;
  std::vector<std::string> universe_;
  std::unordered_map<const PathExpr*, BinaryRelation> paths_;
  std::unordered_map<const ShapeExpr*, NodeSet> atoms_;
};

/// One-shot wrappers over a throwaway context.
NodeSet eval_shape_2v(const ShapeExpr& e, const Graph& g,
                      const ShapeAssignment& a);
TruthValue eval_shape_3v(const ShapeExpr& e, const Graph& g,
                         const PartialInterpretation& p, NodeId node);

}  // namespace rshacl

#endif  // RSHACL_EVAL_HPP
