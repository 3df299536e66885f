// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#include "rshacl/snf.hpp"

#include <algorithm>

namespace rshacl {

namespace {

bool is_atomic_body(const ShapeExpr& e) {
  switch (e.kind) {
    case ShapeExpr::Kind::Top:
    case ShapeExpr::Kind::Nominal:
    case ShapeExpr::Kind::Eq:
    case ShapeExpr::Kind::Disj:
    case ShapeExpr::Kind::Closed:
      return true;
    default:
      return false;
  }
}

bool is_name(const ShapePtr& e) {
  return e && e->kind == ShapeExpr::Kind::Name;
}

bool is_snf_body(const ShapeExpr& e) {
  switch (e.kind) {
    case ShapeExpr::Kind::Not:
      return is_name(e.sub1);
    case ShapeExpr::Kind::And:
    case ShapeExpr::Kind::Or:
      return is_name(e.sub1) && is_name(e.sub2);
    case ShapeExpr::Kind::GeqN:
    case ShapeExpr::Kind::Forall:
      return is_name(e.sub1);
    case ShapeExpr::Kind::Name:
      return false;  // a bare alias is not one of the allowed forms
    default:
      return is_atomic_body(e);
  }
}

class SnfRewriter {
 public:
  explicit SnfRewriter(const Schema& schema) : schema_(schema) {
    // Number fresh names above any reserved ones already present, so a
    // reloaded normal form can be transformed again.
    const std::string prefix = kSnfPrefix;
    for (const auto& r : schema.rules()) {
      if (r.head.rfind(prefix, 0) != 0) continue;
      std::size_t k = 0;
      for (char c : r.head.substr(prefix.size()))
        k = c >= '0' && c <= '9' ? k * 10 + (c - '0') : k;
      counter_ = std::max(counter_, k);
    }
  }

  SnfResult run() {
    SchemaBuilder builder;
    for (const auto& r : schema_.rules()) {
      current_head_ = r.head;
      builder.rule(r.head, shallow(*r.body));
    }
    for (auto& r : fresh_rules_)
      builder.rule(std::move(r.head), std::move(r.body));
    for (const auto& t : schema_.targets())
      builder.target(t.query, t.shape_name);
    SnfResult out;
    out.schema = std::move(builder).build();
    out.original_count = schema_.shape_count();
    out.introduced = std::move(introduced_);
    return out;
  }

 private:
  // Returns the name standing for a subshape, introducing a fresh rule
  // unless the subshape already is a name.
  std::string name_of(const ShapeExpr& e) {
    if (e.kind == ShapeExpr::Kind::Name) return e.text;
    std::string fresh = kSnfPrefix + std::to_string(++counter_);
    introduced_.push_back(SnfIntroduction{fresh, current_head_});
    fresh_rules_.push_back(Rule{fresh, shallow(e)});
    return fresh;
  }

  // Rewrites one body level: children become shape names.
  ShapePtr shallow(const ShapeExpr& e) {
    switch (e.kind) {
      case ShapeExpr::Kind::Not:
        return not_(name(name_of(*e.sub1)), e.span);
      case ShapeExpr::Kind::And: {
        ShapePtr a = name(name_of(*e.sub1));  // sequence the fresh numbering
        ShapePtr b = name(name_of(*e.sub2));
        return and_(std::move(a), std::move(b), e.span);
      }
      case ShapeExpr::Kind::Or: {
        ShapePtr a = name(name_of(*e.sub1));
        ShapePtr b = name(name_of(*e.sub2));
        return or_(std::move(a), std::move(b), e.span);
      }
      case ShapeExpr::Kind::GeqN:
        return geq(e.bound, e.path1, name(name_of(*e.sub1)), e.span);
      case ShapeExpr::Kind::Forall:
        return forall(e.path1, name(name_of(*e.sub1)), e.span);
      case ShapeExpr::Kind::Name:
        // The allowed forms have no bare alias; s' and s' is equivalent in
        // every semantics handled here.
        return and_(name(e.text), name(e.text), e.span);
      default: {
        auto copy = e;
        copy.shape = kUnresolvedShape;
        return std::make_shared<ShapeExpr>(std::move(copy));
      }
    }
  }

  const Schema& schema_;
  std::string current_head_;
  std::size_t counter_ = 0;
  std::vector<Rule> fresh_rules_;
  std::vector<SnfIntroduction> introduced_;
};

}  // namespace

bool is_snf(const Schema& schema) {
  for (const auto& r : schema.rules())
    if (!is_snf_body(*r.body)) return false;
  return true;
}

SnfResult to_snf(const Schema& schema) { return SnfRewriter(schema).run(); }

ShapeAssignment restrict_assignment(const ShapeAssignment& a,
                                    std::size_t shape_count) {
  if (shape_count > a.shape_count())
    throw VocabularyError("cannot restrict to more shapes than present");
  ShapeAssignment out(shape_count, a.domain_size());
  for (ShapeId s = 0; s < shape_count; ++s) out.at(s) = a.at(s);
  return out;
}

}  // namespace rshacl
