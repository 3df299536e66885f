// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include "rshacl/textio.hpp"

namespace rshacl {

namespace {

// Path printing follows the surface precedence: '|' < '/' < postfix.
enum PathPrec { kUnion = 0, kCompose = 1, kPostfix = 2 };

void print_path_rec(std::ostream& os, const PathExpr& e, int min_prec,
                    bool right_operand);

// Inverse is surface syntax only on plain properties; composite operands
// are pushed down through the relation-algebra identities, which preserve
// the denoted relation.
void print_inverse(std::ostream& os, const PathExpr& inner, int min_prec,
                   bool right_operand) {
  switch (inner.kind) {
    case PathExpr::Kind::Prop:
      os << '^' << inner.prop;
      return;
    case PathExpr::Kind::Inverse:
      print_path_rec(os, *inner.lhs, min_prec, right_operand);
      return;
    case PathExpr::Kind::Union: {
      PathPtr pushed = path_union(inverse(inner.lhs), inverse(inner.rhs));
      print_path_rec(os, *pushed, min_prec, right_operand);
      return;
    }
    case PathExpr::Kind::Compose: {
      PathPtr pushed = path_compose(inverse(inner.rhs), inverse(inner.lhs));
      print_path_rec(os, *pushed, min_prec, right_operand);
      return;
    }
    case PathExpr::Kind::Star: {
      PathPtr pushed = star(inverse(inner.lhs));
      print_path_rec(os, *pushed, min_prec, right_operand);
      return;
    }
    case PathExpr::Kind::Optional: {
      PathPtr pushed = optional(inverse(inner.lhs));
      print_path_rec(os, *pushed, min_prec, right_operand);
      return;
    }
  }
}

void print_path_rec(std::ostream& os, const PathExpr& e, int min_prec,
                    bool right_operand) {
  switch (e.kind) {
    case PathExpr::Kind::Prop:
      os << e.prop;
      return;
    case PathExpr::Kind::Inverse:
      print_inverse(os, *e.lhs, min_prec, right_operand);
      return;
    case PathExpr::Kind::Union: {
      bool parens = min_prec > kUnion || (right_operand && min_prec == kUnion);
      if (parens) os << '(';
      print_path_rec(os, *e.lhs, kUnion, false);
      os << '|';
      print_path_rec(os, *e.rhs, kUnion, true);
      if (parens) os << ')';
      return;
    }
    case PathExpr::Kind::Compose: {
      bool parens =
          min_prec > kCompose || (right_operand && min_prec == kCompose);
      if (parens) os << '(';
      print_path_rec(os, *e.lhs, kCompose, false);
      os << '/';
      print_path_rec(os, *e.rhs, kCompose, true);
      if (parens) os << ')';
      return;
    }
    case PathExpr::Kind::Star:
      print_path_rec(os, *e.lhs, kPostfix, false);
      os << '*';
      return;
    case PathExpr::Kind::Optional:
      print_path_rec(os, *e.lhs, kPostfix, false);
      os << '?';
      return;
  }
}

// Shape precedence: 'or' < 'and' < unary.
enum ShapePrec { kOr = 0, kAnd = 1, kUnary = 2 };

void print_shape_rec(std::ostream& os, const ShapeExpr& e, int min_prec,
                     bool right_operand) {
  switch (e.kind) {
    case ShapeExpr::Kind::Top:
      os << "top";
      return;
    case ShapeExpr::Kind::Name:
      os << e.text;
      return;
    case ShapeExpr::Kind::Nominal:
      os << '{' << e.text << '}';
      return;
    case ShapeExpr::Kind::Or: {
      bool parens = min_prec > kOr || (right_operand && min_prec == kOr);
      if (parens) os << '(';
      print_shape_rec(os, *e.sub1, kOr, false);
      os << " or ";
      print_shape_rec(os, *e.sub2, kOr, true);
      if (parens) os << ')';
      return;
    }
    case ShapeExpr::Kind::And: {
      bool parens = min_prec > kAnd || (right_operand && min_prec == kAnd);
      if (parens) os << '(';
      print_shape_rec(os, *e.sub1, kAnd, false);
      os << " and ";
      print_shape_rec(os, *e.sub2, kAnd, true);
      if (parens) os << ')';
      return;
    }
    case ShapeExpr::Kind::Not:
      os << "not ";
      print_shape_rec(os, *e.sub1, kUnary, false);
      return;
    case ShapeExpr::Kind::GeqN:
      os << "geq " << e.bound << " (";
      print_path_rec(os, *e.path1, kUnion, false);
      os << ", ";
      print_shape_rec(os, *e.sub1, kOr, false);
      os << ')';
      return;
    case ShapeExpr::Kind::Forall:
      os << "forall (";
      print_path_rec(os, *e.path1, kUnion, false);
      os << ", ";
      print_shape_rec(os, *e.sub1, kOr, false);
      os << ')';
      return;
    case ShapeExpr::Kind::Eq:
    case ShapeExpr::Kind::Disj:
      os << (e.kind == ShapeExpr::Kind::Eq ? "eq(" : "disjoint(");
      print_path_rec(os, *e.path1, kUnion, false);
      os << ", ";
      print_path_rec(os, *e.path2, kUnion, false);
      os << ')';
      return;
    case ShapeExpr::Kind::Closed: {
      os << "closed(";
      for (std::size_t i = 0; i < e.closed_props.size(); ++i) {
        if (i) os << ", ";
        os << e.closed_props[i];
      }
      os << ')';
      return;
    }
  }
}

std::string set_to_list(const NodeSet& s, const Graph& g) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto b = s.find_first(); b != NodeSet::npos; b = s.find_next(b)) {
    if (!first) os << ", ";
    os << g.node_name(static_cast<NodeId>(b));
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

std::string print_path(const PathExpr& e) {
  std::ostringstream os;
  print_path_rec(os, e, kUnion, false);
  return os.str();
}

std::string print_shape(const ShapeExpr& e) {
  std::ostringstream os;
  print_shape_rec(os, e, kOr, false);
  return os.str();
}

std::string print_schema(const Schema& schema) {
  std::ostringstream os;
  for (const auto& r : schema.rules())
    os << "shape " << r.head << " := " << print_shape(*r.body) << ";\n";
  for (const auto& t : schema.targets())
    os << "target " << print_shape(*t.query) << " <= " << t.shape_name
       << ";\n";
  return os.str();
}

std::string print_graph(const Graph& g) {
  std::ostringstream os;
  for (NodeId a = 0; a < g.domain_size(); ++a)
    os << "node " << g.node_name(a) << "\n";
  for (const auto& [p, rel] : g.properties())
    for (auto [a, b] : rel.pairs())
      os << g.node_name(a) << " " << p << " " << g.node_name(b) << "\n";
  return os.str();
}

std::string print_assignment(const ShapeAssignment& a, const Schema& schema,
                             const Graph& g, const std::string& indent) {
  std::ostringstream os;
  for (ShapeId s = 0; s < a.shape_count(); ++s)
    os << indent << schema.shape_name(s) << ": " << set_to_list(a.at(s), g)
       << "\n";
  return os.str();
}

std::string print_partial(const PartialInterpretation& p,
                          const Schema& schema, const Graph& g,
                          const std::string& indent) {
  std::ostringstream os;
  for (ShapeId s = 0; s < p.shape_count(); ++s) {
    NodeSet unknown = p.upper().at(s) - p.lower().at(s);
    os << indent << schema.shape_name(s) << ": true "
       << set_to_list(p.lower().at(s), g) << ", unknown "
       << set_to_list(unknown, g) << ", false "
       << set_to_list(~p.upper().at(s), g) << "\n";
  }
  return os.str();
}

}  // namespace rshacl
