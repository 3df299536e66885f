// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#include "rshacl/eval.hpp"

#include <algorithm>

namespace rshacl {

BinaryRelation eval_path(const PathExpr& e, const Graph& g) {
  switch (e.kind) {
    case PathExpr::Kind::Prop:
      return g.property(e.prop);
    case PathExpr::Kind::Inverse:
      return eval_path(*e.lhs, g).inverse();
    case PathExpr::Kind::Union:
      return eval_path(*e.lhs, g).unite(eval_path(*e.rhs, g));
    case PathExpr::Kind::Compose:
      return eval_path(*e.lhs, g).compose(eval_path(*e.rhs, g));
    case PathExpr::Kind::Star:
      return eval_path(*e.lhs, g).reflexive_transitive_closure();
    case PathExpr::Kind::Optional:
      return eval_path(*e.lhs, g).with_identity();
  }
  throw InternalError("eval_path: unhandled path kind");
}

ShapeEvalContext::ShapeEvalContext(const Graph& g,
                                   const std::vector<ShapePtr>& exprs,
                                   const std::vector<std::string>& extra)
    : graph_(&g) {
  universe_ = g.property_names();
  for (const auto& p : extra) universe_.push_back(p);
  for (const auto& e : exprs) collect_props(*e, universe_);
  std::sort(universe_.begin(), universe_.end());
  universe_.erase(std::unique(universe_.begin(), universe_.end()),
                  universe_.end());
  for (const auto& e : exprs) prepare(e);
}

void ShapeEvalContext::prepare_path(const PathPtr& e) {
  if (!e || paths_.count(e.get())) return;
  prepare_path(e->lhs);
  prepare_path(e->rhs);
  paths_.emplace(e.get(), eval_path(*e, *graph_));
}

void ShapeEvalContext::prepare(const ShapePtr& e) {
  if (!e || atoms_.count(e.get())) return;
  const std::size_t n = graph_->domain_size();
  prepare_path(e->path1);
  prepare_path(e->path2);
  prepare(e->sub1);
  prepare(e->sub2);
  switch (e->kind) {
    case ShapeExpr::Kind::Nominal: {
      NodeSet s(n);
      s.set(graph_->node(e->text));
      atoms_.emplace(e.get(), std::move(s));
      break;
    }
    case ShapeExpr::Kind::Eq: {
      const BinaryRelation& r1 = paths_.at(e->path1.get());
      const BinaryRelation& r2 = paths_.at(e->path2.get());
      NodeSet s(n);
      for (NodeId a = 0; a < n; ++a)
        if (r1.row(a) == r2.row(a)) s.set(a);
      atoms_.emplace(e.get(), std::move(s));
      break;
    }
    case ShapeExpr::Kind::Disj: {
      const BinaryRelation& r1 = paths_.at(e->path1.get());
      const BinaryRelation& r2 = paths_.at(e->path2.get());
      NodeSet s(n);
      for (NodeId a = 0; a < n; ++a)
        if ((r1.row(a) & r2.row(a)).none()) s.set(a);
      atoms_.emplace(e.get(), std::move(s));
      break;
    }
    case ShapeExpr::Kind::Closed: {
      // Nodes with no outgoing edge on any property outside Q.
      NodeSet s = full_set(n);
      for (const auto& p : universe_) {
        if (std::find(e->closed_props.begin(), e->closed_props.end(), p) !=
            e->closed_props.end())
          continue;
        const BinaryRelation& rel = graph_->property(p);
        for (NodeId a = 0; a < n; ++a)
          if (rel.row(a).any()) s.reset(a);
      }
      atoms_.emplace(e.get(), std::move(s));
      break;
    }
    default:
      break;
  }
}

const BinaryRelation& ShapeEvalContext::path(const PathExpr& e) const {
  auto it = paths_.find(&e);
  if (it == paths_.end())
    throw InternalError("path expression was not prepared in this context");
  return it->second;
}

const NodeSet& ShapeEvalContext::atom(const ShapeExpr& e) const {
  auto it = atoms_.find(&e);
  if (it == atoms_.end())
    throw InternalError("shape expression was not prepared in this context");
  return it->second;
}

namespace {

ShapeId checked_shape(const ShapeExpr& e, std::size_t shape_count) {
  if (e.shape == kUnresolvedShape)
    throw EvalError("unknown shape name '" + e.text + "'");
  if (e.shape >= shape_count)
    throw EvalError("shape name '" + e.text +
                    "' is not assigned by this interpretation");
  return e.shape;
}

}  // namespace

NodeSet ShapeEvalContext::eval2(const ShapeExpr& e,
                                const ShapeAssignment& a) const {
  const std::size_t n = graph_->domain_size();
  switch (e.kind) {
    case ShapeExpr::Kind::Top:
      return full_set(n);
    case ShapeExpr::Kind::Name:
      return a.at(checked_shape(e, a.shape_count()));
    case ShapeExpr::Kind::Nominal:
    case ShapeExpr::Kind::Eq:
    case ShapeExpr::Kind::Disj:
    case ShapeExpr::Kind::Closed:
      return atom(e);
    case ShapeExpr::Kind::And:
      return eval2(*e.sub1, a) & eval2(*e.sub2, a);
    case ShapeExpr::Kind::Or:
      return eval2(*e.sub1, a) | eval2(*e.sub2, a);
    case ShapeExpr::Kind::Not:
      return ~eval2(*e.sub1, a);
    case ShapeExpr::Kind::GeqN: {
      const BinaryRelation& rel = path(*e.path1);
      NodeSet sub = eval2(*e.sub1, a);
      NodeSet out(n);
      for (NodeId x = 0; x < n; ++x)
        if ((rel.row(x) & sub).count() >= e.bound) out.set(x);
      return out;
    }
    case ShapeExpr::Kind::Forall: {
      const BinaryRelation& rel = path(*e.path1);
      NodeSet sub = eval2(*e.sub1, a);
      NodeSet out(n);
      for (NodeId x = 0; x < n; ++x)
        if (rel.row(x).is_subset_of(sub)) out.set(x);
      return out;
    }
  }
  throw InternalError("eval2: unhandled shape kind");
}

SetPair ShapeEvalContext::eval_pair(const ShapeExpr& e,
                                    const ShapeAssignment& lower,
                                    const ShapeAssignment& upper) const {
  const std::size_t n = graph_->domain_size();
  switch (e.kind) {
    case ShapeExpr::Kind::Top:
      return {full_set(n), full_set(n)};
    case ShapeExpr::Kind::Name: {
      ShapeId s = checked_shape(e, lower.shape_count());
      return {lower.at(s), upper.at(s)};
    }
    case ShapeExpr::Kind::Nominal:
    case ShapeExpr::Kind::Eq:
    case ShapeExpr::Kind::Disj:
    case ShapeExpr::Kind::Closed: {
      const NodeSet& s = atom(e);
      return {s, s};
    }
    case ShapeExpr::Kind::And: {
      SetPair a = eval_pair(*e.sub1, lower, upper);
      SetPair b = eval_pair(*e.sub2, lower, upper);
      return {a.lower & b.lower, a.upper & b.upper};
    }
    case ShapeExpr::Kind::Or: {
      SetPair a = eval_pair(*e.sub1, lower, upper);
      SetPair b = eval_pair(*e.sub2, lower, upper);
      return {a.lower | b.lower, a.upper | b.upper};
    }
    case ShapeExpr::Kind::Not: {
      // Negation swaps the roles of the two bounds.
      SetPair a = eval_pair(*e.sub1, lower, upper);
      return {~a.upper, ~a.lower};
    }
    case ShapeExpr::Kind::GeqN: {
      // Certainly true: n successors certainly satisfy the subshape.
      // Possibly true: n successors possibly satisfy it.
      const BinaryRelation& rel = path(*e.path1);
      SetPair a = eval_pair(*e.sub1, lower, upper);
      SetPair out{NodeSet(n), NodeSet(n)};
      for (NodeId x = 0; x < n; ++x) {
        if ((rel.row(x) & a.lower).count() >= e.bound) out.lower.set(x);
        if ((rel.row(x) & a.upper).count() >= e.bound) out.upper.set(x);
      }
      return out;
    }
    case ShapeExpr::Kind::Forall: {
      const BinaryRelation& rel = path(*e.path1);
      SetPair a = eval_pair(*e.sub1, lower, upper);
      SetPair out{NodeSet(n), NodeSet(n)};
      for (NodeId x = 0; x < n; ++x) {
        if (rel.row(x).is_subset_of(a.lower)) out.lower.set(x);
        if (rel.row(x).is_subset_of(a.upper)) out.upper.set(x);
      }
      return out;
    }
  }
  throw InternalError("eval_pair: unhandled shape kind");
}

TruthValue ShapeEvalContext::eval3(const ShapeExpr& e,
                                   const PartialInterpretation& p,
                                   NodeId node) const {
  SetPair v = eval_pair(e, p.lower(), p.upper());
  if (v.lower.test(node)) return TruthValue::True;
  if (!v.upper.test(node)) return TruthValue::False;
  return TruthValue::Unknown;
}

NodeSet eval_shape_2v(const ShapeExpr& e, const Graph& g,
                      const ShapeAssignment& a) {
  auto expr = std::make_shared<ShapeExpr>(e);
  ShapeEvalContext ctx(g, {expr});
  return ctx.eval2(*expr, a);
}

TruthValue eval_shape_3v(const ShapeExpr& e, const Graph& g,
                         const PartialInterpretation& p, NodeId node) {
  auto expr = std::make_shared<ShapeExpr>(e);
  ShapeEvalContext ctx(g, {expr});
  return ctx.eval3(*expr, p, node);
}

}  // namespace rshacl
