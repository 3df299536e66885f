// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#include "rshacl/ast.hpp"

namespace rshacl {

bool same_path(const PathExpr& a, const PathExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case PathExpr::Kind::Prop:
      return a.prop == b.prop;
    case PathExpr::Kind::Inverse:
    case PathExpr::Kind::Star:
    case PathExpr::Kind::Optional:
      return same_path(*a.lhs, *b.lhs);
    case PathExpr::Kind::Union:
    case PathExpr::Kind::Compose:
      return same_path(*a.lhs, *b.lhs) && same_path(*a.rhs, *b.rhs);
  }
  return false;
}

bool same_shape(const ShapeExpr& a, const ShapeExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ShapeExpr::Kind::Top:
      return true;
    case ShapeExpr::Kind::Name:
    case ShapeExpr::Kind::Nominal:
      return a.text == b.text;
    case ShapeExpr::Kind::Not:
      return same_shape(*a.sub1, *b.sub1);
    case ShapeExpr::Kind::And:
    case ShapeExpr::Kind::Or:
      return same_shape(*a.sub1, *b.sub1) && same_shape(*a.sub2, *b.sub2);
    case ShapeExpr::Kind::Forall:
      return same_path(*a.path1, *b.path1) && same_shape(*a.sub1, *b.sub1);
    case ShapeExpr::Kind::GeqN:
      return a.bound == b.bound && same_path(*a.path1, *b.path1) &&
             same_shape(*a.sub1, *b.sub1);
    case ShapeExpr::Kind::Eq:
    case ShapeExpr::Kind::Disj:
      return same_path(*a.path1, *b.path1) && same_path(*a.path2, *b.path2);
    case ShapeExpr::Kind::Closed:
      return a.closed_props == b.closed_props;
  }
  return false;
}

void collect_props(const PathExpr& e, std::vector<std::string>& out) {
  switch (e.kind) {
    case PathExpr::Kind::Prop:
      out.push_back(e.prop);
      return;
    case PathExpr::Kind::Inverse:
    case PathExpr::Kind::Star:
    case PathExpr::Kind::Optional:
      collect_props(*e.lhs, out);
      return;
    case PathExpr::Kind::Union:
    case PathExpr::Kind::Compose:
      collect_props(*e.lhs, out);
      collect_props(*e.rhs, out);
      return;
  }
}

void collect_props(const ShapeExpr& e, std::vector<std::string>& out) {
  if (e.path1) collect_props(*e.path1, out);
  if (e.path2) collect_props(*e.path2, out);
  if (e.sub1) collect_props(*e.sub1, out);
  if (e.sub2) collect_props(*e.sub2, out);
  for (const auto& p : e.closed_props) out.push_back(p);
}

void collect_shape_names(const ShapeExpr& e, std::vector<std::string>& out) {
  if (e.kind == ShapeExpr::Kind::Name) out.push_back(e.text);
  if (e.sub1) collect_shape_names(*e.sub1, out);
  if (e.sub2) collect_shape_names(*e.sub2, out);
}

}  // namespace rshacl
