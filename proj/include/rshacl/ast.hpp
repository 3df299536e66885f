// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RSHACL_AST_HPP
#define RSHACL_AST_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "rshacl/errors.hpp"
#include "rshacl/interpretation.hpp"

namespace rshacl {

inline constexpr ShapeId kUnresolvedShape =
    std::numeric_limits<ShapeId>::max();

struct PathExpr;
using PathPtr = std::shared_ptr<const PathExpr>;

/// A regular path expression over property names.
struct PathExpr {
  enum class Kind { Prop, Inverse, Union, Compose, Star, Optional };

  Kind kind;
  std::string prop;  // Prop
  PathPtr lhs, rhs;  // children (rhs only for Union/Compose)
  SourceSpan span;
};

inline PathPtr prop(std::string name, SourceSpan sp = {}) {
  return std::make_shared<PathExpr>(
      PathExpr{PathExpr::Kind::Prop, std::move(name), nullptr, nullptr, sp});
}
inline PathPtr inverse(PathPtr e, SourceSpan sp = {}) {
  return std::make_shared<PathExpr>(
      PathExpr{PathExpr::Kind::Inverse, {}, std::move(e), nullptr, sp});
}
inline PathPtr path_union(PathPtr a, PathPtr b, SourceSpan sp = {}) {
  return std::make_shared<PathExpr>(
      PathExpr{PathExpr::Kind::Union, {}, std::move(a), std::move(b), sp});
}
inline PathPtr path_compose(PathPtr a, PathPtr b, SourceSpan sp = {}) {
  return std::make_shared<PathExpr>(
      PathExpr{PathExpr::Kind::Compose, {}, std::move(a), std::move(b), sp});
}
inline PathPtr star(PathPtr e, SourceSpan sp = {}) {
  return std::make_shared<PathExpr>(
      PathExpr{PathExpr::Kind::Star, {}, std::move(e), nullptr, sp});
}
inline PathPtr optional(PathPtr e, SourceSpan sp = {}) {
  return std::make_shared<PathExpr>(
      PathExpr{PathExpr::Kind::Optional, {}, std::move(e), nullptr, sp});
}

struct ShapeExpr;
using ShapePtr = std::shared_ptr<const ShapeExpr>;

/// A shape expression. Name nodes carry the source text and, once the
/// expression has been bound into a schema, the resolved shape index.
struct ShapeExpr {
  enum class Kind {
    Top,
    Name,
    Nominal,
    And,
    Or,
    Not,
    Forall,
    GeqN,
    Eq,
    Disj,
    Closed,
  };

  Kind kind;
  std::string text;        // Name: shape name; Nominal: constant name
  ShapeId shape = kUnresolvedShape;  // Name, after resolution
  std::uint32_t bound = 0;           // GeqN: n >= 1
  ShapePtr sub1, sub2;               // shape children
  PathPtr path1, path2;              // path children
  std::vector<std::string> closed_props;  // Closed: the allowed set Q
  SourceSpan span;
};

inline ShapePtr top(SourceSpan sp = {}) {
  return std::make_shared<ShapeExpr>(ShapeExpr{
      ShapeExpr::Kind::Top, {}, kUnresolvedShape, 0, nullptr, nullptr,
      nullptr, nullptr, {}, sp});
}
inline ShapePtr name(std::string shape_name, SourceSpan sp = {}) {
  return std::make_shared<ShapeExpr>(ShapeExpr{
      ShapeExpr::Kind::Name, std::move(shape_name), kUnresolvedShape, 0,
      nullptr, nullptr, nullptr, nullptr, {}, sp});
}
inline ShapePtr resolved_name(std::string shape_name, ShapeId id,
                              SourceSpan sp = {}) {
  return std::make_shared<ShapeExpr>(ShapeExpr{
      ShapeExpr::Kind::Name, std::move(shape_name), id, 0, nullptr, nullptr,
      nullptr, nullptr, {}, sp});
}
inline ShapePtr nominal(std::string constant, SourceSpan sp = {}) {
  return std::make_shared<ShapeExpr>(ShapeExpr{
      ShapeExpr::Kind::Nominal, std::move(constant), kUnresolvedShape, 0,
      nullptr, nullptr, nullptr, nullptr, {}, sp});
}
inline ShapePtr and_(ShapePtr a, ShapePtr b, SourceSpan sp = {}) {
  return std::make_shared<ShapeExpr>(ShapeExpr{
      ShapeExpr::Kind::And, {}, kUnresolvedShape, 0, std::move(a),
      std::move(b), nullptr, nullptr, {}, sp});
}
inline ShapePtr or_(ShapePtr a, ShapePtr b, SourceSpan sp = {}) {
  return std::make_shared<ShapeExpr>(ShapeExpr{
      ShapeExpr::Kind::Or, {}, kUnresolvedShape, 0, std::move(a),
      std::move(b), nullptr, nullptr, {}, sp});
}
inline ShapePtr not_(ShapePtr a, SourceSpan sp = {}) {
  return std::make_shared<ShapeExpr>(ShapeExpr{
      ShapeExpr::Kind::Not, {}, kUnresolvedShape, 0, std::move(a), nullptr,
      nullptr, nullptr, {}, sp});
}
inline ShapePtr forall(PathPtr e, ShapePtr a, SourceSpan sp = {}) {
  return std::make_shared<ShapeExpr>(ShapeExpr{
      ShapeExpr::Kind::Forall, {}, kUnresolvedShape, 0, std::move(a), nullptr,
      std::move(e), nullptr, {}, sp});
}
inline ShapePtr geq(std::uint32_t n, PathPtr e, ShapePtr a,
                    SourceSpan sp = {}) {
  if (n == 0) throw SchemaError("cardinality bound must be at least 1");
  return std::make_shared<ShapeExpr>(ShapeExpr{
      ShapeExpr::Kind::GeqN, {}, kUnresolvedShape, n, std::move(a), nullptr,
      std::move(e), nullptr, {}, sp});
}
inline ShapePtr eq(PathPtr a, PathPtr b, SourceSpan sp = {}) {
  return std::make_shared<ShapeExpr>(ShapeExpr{
      ShapeExpr::Kind::Eq, {}, kUnresolvedShape, 0, nullptr, nullptr,
      std::move(a), std::move(b), {}, sp});
}
inline ShapePtr disj(PathPtr a, PathPtr b, SourceSpan sp = {}) {
  return std::make_shared<ShapeExpr>(ShapeExpr{
      ShapeExpr::Kind::Disj, {}, kUnresolvedShape, 0, nullptr, nullptr,
      std::move(a), std::move(b), {}, sp});
}
inline ShapePtr closed(std::vector<std::string> allowed, SourceSpan sp = {}) {
  return std::make_shared<ShapeExpr>(ShapeExpr{
      ShapeExpr::Kind::Closed, {}, kUnresolvedShape, 0, nullptr, nullptr,
      nullptr, nullptr, std::move(allowed), sp});
}

/// Structural equality ignoring spans and name-resolution state.
bool same_path(const PathExpr& a, const PathExpr& b);
bool same_shape(const ShapeExpr& a, const ShapeExpr& b);

/// Collects the property names mentioned in an expression.
void collect_props(const PathExpr& e, std::vector<std::string>& out);
void collect_props(const ShapeExpr& e, std::vector<std::string>& out);

/// Collects the shape names mentioned in an expression.
void collect_shape_names(const ShapeExpr& e, std::vector<std::string>& out);

}  // namespace rshacl

#endif  // RSHACL_AST_HPP
