// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#include "rshacl/acorss.hpp"

#include <algorithm>

#include "rshacl/snf.hpp"

namespace rshacl {

namespace {

// Derived level of a subformula occurrence at a node where it is true.
// `truths` maps each occurrence to its two-valued extension in the model;
// `levels` carries the current shape-atom levels.
class LevelEvaluator {
 public:
  LevelEvaluator(const ShapeEvalContext& ctx,
                 const std::unordered_map<const ShapeExpr*, NodeSet>& truths,
                 const std::vector<std::vector<std::uint64_t>>& levels)
      : ctx_(ctx), truths_(truths), levels_(levels) {}

  std::uint64_t level(const ShapeExpr& e, NodeId a) const {
    switch (e.kind) {
      case ShapeExpr::Kind::Top:
      case ShapeExpr::Kind::Nominal:
      case ShapeExpr::Kind::Eq:
      case ShapeExpr::Kind::Disj:
      case ShapeExpr::Kind::Closed:
      case ShapeExpr::Kind::Not:
        // Negations and shape-free atoms carry no derivation depth.
        return 0;
      case ShapeExpr::Kind::Name:
        return levels_[e.shape][a];
      case ShapeExpr::Kind::And:
        return std::max(level(*e.sub1, a), level(*e.sub2, a));
      case ShapeExpr::Kind::Or: {
        // Least level among the true disjuncts; at least one is true.
        std::uint64_t best = UINT64_MAX;
        if (truths_.at(e.sub1.get()).test(a))
          best = std::min(best, level(*e.sub1, a));
        if (truths_.at(e.sub2.get()).test(a))
          best = std::min(best, level(*e.sub2, a));
        return best;
      }
      case ShapeExpr::Kind::GeqN: {
        // Smallest bound k admitting `bound` true successors of level <= k:
        // the bound-th smallest level among true successors.
        const BinaryRelation& rel = ctx_.path(*e.path1);
        NodeSet good = rel.row(a) & truths_.at(e.sub1.get());
        std::vector<std::uint64_t> ls;
        for (auto b = good.find_first(); b != NodeSet::npos;
             b = good.find_next(b))
          ls.push_back(level(*e.sub1, static_cast<NodeId>(b)));
        std::sort(ls.begin(), ls.end());
        return ls[e.bound - 1];
      }
      case ShapeExpr::Kind::Forall: {
        const BinaryRelation& rel = ctx_.path(*e.path1);
        NodeSet good = rel.row(a) & truths_.at(e.sub1.get());
        std::uint64_t best = 0;
        for (auto b = good.find_first(); b != NodeSet::npos;
             b = good.find_next(b))
          best = std::max(best, level(*e.sub1, static_cast<NodeId>(b)));
        return best;
      }
    }
    throw InternalError("level: unhandled shape kind");
  }

 private:
  const ShapeEvalContext& ctx_;
  const std::unordered_map<const ShapeExpr*, NodeSet>& truths_;
  const std::vector<std::vector<std::uint64_t>>& levels_;
};

void collect_truths(const ShapeEvalContext& ctx, const ShapePtr& e,
                    const ShapeAssignment& m,
                    std::unordered_map<const ShapeExpr*, NodeSet>& out) {
  if (!e || out.count(e.get())) return;
  collect_truths(ctx, e->sub1, m, out);
  collect_truths(ctx, e->sub2, m, out);
  out.emplace(e.get(), ctx.eval2(*e, m));
}

}  // namespace

std::optional<LevelAssignment> minimal_levels(const Schema& schema,
                                              const Graph& g,
                                              const ShapeAssignment& m) {
  Engine engine(schema, g);
  if (!(engine.t_op(m) == m))
    throw EvalError("minimal_levels requires a supported model");

  const ShapeEvalContext& ctx = engine.context();
  std::unordered_map<const ShapeExpr*, NodeSet> truths;
  for (const auto& r : schema.rules()) collect_truths(ctx, r.body, m, truths);

  std::uint64_t true_atoms = 0;
  for (ShapeId s = 0; s < schema.shape_count(); ++s)
    true_atoms += m.at(s).count();
  const std::uint64_t bound = true_atoms + 1;

  LevelAssignment out;
  out.levels.assign(schema.shape_count(),
                    std::vector<std::uint64_t>(g.domain_size(), 0));
  LevelEvaluator eval(ctx, truths, out.levels);

  // Ascending iteration of the least solution: every true head atom must
  // sit strictly above its body's derived level.
  for (bool changed = true; changed;) {
    changed = false;
    for (ShapeId s = 0; s < schema.shape_count(); ++s) {
      const ShapeExpr& body = *schema.rule(s).body;
      for (auto a = m.at(s).find_first(); a != NodeSet::npos;
           a = m.at(s).find_next(a)) {
        std::uint64_t need = eval.level(body, static_cast<NodeId>(a)) + 1;
        auto& cell = out.levels[s][a];
        if (cell < need) {
          if (need > bound) return std::nullopt;
          cell = need;
          changed = true;
        }
      }
    }
  }
  return out;
}

bool is_acorss_stable(const Schema& schema, const Graph& g,
                      const ShapeAssignment& m) {
  if (!(t_op(schema, g, m) == m)) return false;
  return minimal_levels(schema, g, m).has_value();
}

bool level_assignment_valid(const Schema& schema, const Graph& g,
                            const ShapeAssignment& m,
                            const LevelAssignment& candidate) {
  Engine engine(schema, g);
  if (!(engine.t_op(m) == m))
    throw EvalError("level_assignment_valid requires a supported model");
  const ShapeEvalContext& ctx = engine.context();
  std::unordered_map<const ShapeExpr*, NodeSet> truths;
  for (const auto& r : schema.rules()) collect_truths(ctx, r.body, m, truths);
  LevelEvaluator eval(ctx, truths, candidate.levels);
  for (ShapeId s = 0; s < schema.shape_count(); ++s) {
    const ShapeExpr& body = *schema.rule(s).body;
    for (auto a = m.at(s).find_first(); a != NodeSet::npos;
         a = m.at(s).find_next(a))
      if (candidate.levels[s][a] <= eval.level(body, static_cast<NodeId>(a)))
        return false;
  }
  return true;
}

SemanticsComparison compare_semantics(const Schema& schema, const Graph& g,
                                      const EnumLimits& limits) {
  Engine engine(schema, g);
  SemanticsComparison out;
  out.snf = is_snf(schema);
  for (const auto& m : engine.enumerate_supported(limits)) {
    ModelClassification c;
    c.model = m;
    c.aft_stable = engine.is_stable(m);
    if (!c.aft_stable) {
      // Recompute the witness: the lower bound the candidate justifies.
      c.stable_lfp = stable_revision(schema, g, exactify(m)).lower();
    }
    c.levels = minimal_levels(schema, g, m);
    c.acorss_stable = c.levels.has_value();
    if (c.aft_stable && !c.acorss_stable)
      throw InternalError(
          "a fixpoint-stable model failed the level-mapping check");
    out.models.push_back(std::move(c));
  }
  out.supported_count = out.models.size();
  for (const auto& c : out.models) {
    if (c.aft_stable) ++out.aft_stable_count;
    if (c.acorss_stable) ++out.acorss_stable_count;
  }
  if (out.snf && out.aft_stable_count != out.acorss_stable_count)
    throw InternalError(
        "stable-model notions diverged on a schema in shape normal form");
  return out;
}

}  // namespace rshacl
