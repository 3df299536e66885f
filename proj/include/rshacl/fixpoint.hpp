// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RSHACL_FIXPOINT_HPP
#define RSHACL_FIXPOINT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rshacl/eval.hpp"
#include "rshacl/graph.hpp"
#include "rshacl/interpretation.hpp"
#include "rshacl/schema.hpp"

namespace rshacl {

enum class SemanticsKind { Supported, Stable, WellFounded, KripkeKleene };

const char* to_string(SemanticsKind k);
std::optional<SemanticsKind> semantics_from_string(const std::string& s);

/// Caps for the model-search operations. Exceeding a cap raises a
/// ResourceError naming it.
struct EnumLimits {
  std::uint64_t max_candidates = std::uint64_t{1} << 22;
};

/// Least fixpoint of a truth-order-monotone operator on assignments,
/// computed by iteration from the empty assignment. Throws InternalError if
/// the iteration has not stabilized after shapes*domain + 1 steps, which a
/// monotone operator cannot need.
ShapeAssignment lfp_monotone(
    const std::function<ShapeAssignment(const ShapeAssignment&)>& f,
    std::size_t shape_count, std::size_t domain_size);

/// Binds a schema to a graph and precomputes the graph-only parts of rule
/// evaluation. All operators are pure; the engine holds references to the
/// schema and graph, which must outlive it.
class Engine {
 public:
  Engine(const Schema& schema, const Graph& graph);

  const Schema& schema() const { return *schema_; }
  const Graph& graph() const { return *graph_; }
  const ShapeEvalContext& context() const { return ctx_; }

  std::size_t shape_count() const { return schema_->shape_count(); }
  std::size_t domain_size() const { return graph_->domain_size(); }

  ShapeAssignment bottom() const {
    return ShapeAssignment::bottom(shape_count(), domain_size());
  }
  ShapeAssignment top_assignment() const {
    return ShapeAssignment::top(shape_count(), domain_size());
  }
  PartialInterpretation least_precise() const {
    return PartialInterpretation::least_precise(shape_count(), domain_size());
  }

  /// Immediate consequence operator: every shape is re-evaluated from its
  /// rule body, simultaneously.
  ShapeAssignment t_op(const ShapeAssignment& a) const;

  /// Three-valued counterpart of t_op on consistent pairs.
  PartialInterpretation psi_op(const PartialInterpretation& p) const;

  /// Least-precise fixpoint of psi_op, reached by iteration from the least
  /// precise pair.
  PartialInterpretation kripke_kleene() const;

  /// One step of the stable revision: rebuilds the lower bound as the least
  /// fixpoint of the lower operator with the upper bound fixed, and dually.
  PartialInterpretation stable_revision(const PartialInterpretation& p) const;

  /// Least-precise fixpoint of stable_revision.
  PartialInterpretation well_founded() const;

  /// True iff a is a t_op fixpoint whose exact pair is stable-revision
  /// fixed, i.e. a rebuilds itself from below with its own upper bound.
  bool is_stable(const ShapeAssignment& a) const;

  /// All t_op fixpoints, in canonical order. Branches over the atoms left
  /// unknown by the Kripke-Kleene model, propagating decided values.
  std::vector<ShapeAssignment> enumerate_supported(
      const EnumLimits& limits = {}) const;

  /// Supported models passing is_stable.
  std::vector<ShapeAssignment> enumerate_stable(
      const EnumLimits& limits = {}) const;

  /// All consistent pairs fixed by stable_revision, by exhaustive sweep.
  std::vector<PartialInterpretation> enumerate_partial_stable(
      const EnumLimits& limits = {}) const;

 private:
  struct RawPair {
    ShapeAssignment lower, upper;
  };

  ShapeAssignment apply2(const ShapeAssignment& a) const;
  RawPair apply_pair(const ShapeAssignment& lower,
                     const ShapeAssignment& upper) const;
  ShapeAssignment lfp_lower_given_upper(const ShapeAssignment& upper) const;
  ShapeAssignment lfp_upper_given_lower(const ShapeAssignment& lower) const;
  void check_assignment(const ShapeAssignment& a) const;

  const Schema* schema_;
  const Graph* graph_;
  ShapeEvalContext ctx_;
};

// Convenience wrappers matching the operator-level API; each call binds a
// fresh engine, so prefer Engine for repeated use.
ShapeAssignment t_op(const Schema& schema, const Graph& g,
                     const ShapeAssignment& a);
PartialInterpretation psi_op(const Schema& schema, const Graph& g,
                             const PartialInterpretation& p);
PartialInterpretation kripke_kleene(const Schema& schema, const Graph& g);
PartialInterpretation stable_revision(const Schema& schema, const Graph& g,
                                      const PartialInterpretation& p);
PartialInterpretation well_founded(const Schema& schema, const Graph& g);
bool is_stable(const Schema& schema, const Graph& g,
               const ShapeAssignment& a);
std::vector<ShapeAssignment> enumerate_supported(const Schema& schema,
                                                 const Graph& g,
                                                 const EnumLimits& = {});
std::vector<ShapeAssignment> enumerate_stable(const Schema& schema,
                                              const Graph& g,
                                              const EnumLimits& = {});
std::vector<PartialInterpretation> enumerate_partial_stable(
    const Schema& schema, const Graph& g, const EnumLimits& = {});

}  // namespace rshacl

#endif  // RSHACL_FIXPOINT_HPP
