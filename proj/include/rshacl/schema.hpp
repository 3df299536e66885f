// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RSHACL_SCHEMA_HPP
#define RSHACL_SCHEMA_HPP

#include <optional>
#include <string>
#include <vector>

#include "rshacl/ast.hpp"

namespace rshacl {

/// A shape definition s <- body. Shape index equals the rule's position in
/// the schema's rule list.
struct Rule {
  std::string head;
  ShapePtr body;
};

/// A targeting constraint query <= shape: every node satisfying the query
/// must satisfy the shape. The query mentions no shape names.
struct Target {
  ShapePtr query;
  ShapeId shape = kUnresolvedShape;
  std::string shape_name;
};

/// A schema: one rule per shape name plus a list of targets. Bodies are
/// name-resolved against the vocabulary (rule order) at construction.
class Schema {
 public:
  Schema() = default;

  std::size_t shape_count() const { return rules_.size(); }
  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(ShapeId s) const { return rules_[s]; }
  const std::vector<Target>& targets() const { return targets_; }

  const std::string& shape_name(ShapeId s) const { return rules_[s].head; }
  std::optional<ShapeId> find_shape(const std::string& name) const;

  /// Property names mentioned anywhere in rule bodies or target queries,
  /// in lexicographic order.
  std::vector<std::string> mentioned_properties() const;

  bool operator==(const Schema& other) const;

 private:
  friend class SchemaBuilder;
  std::vector<Rule> rules_;
  std::vector<Target> targets_;
};

/// Assembles and validates a schema: checks that every head is defined
/// exactly once, that every mentioned shape name has a rule, that target
/// queries are shape-free, and resolves Name nodes to dense indices.
class SchemaBuilder {
 public:
  SchemaBuilder& rule(std::string head, ShapePtr body);
  SchemaBuilder& target(ShapePtr query, std::string shape);
  Schema build() &&;

 private:
  std::vector<Rule> rules_;
  std::vector<Target> targets_;
};

/// Direct reachability in the body-mention graph, transitively closed:
/// true iff s2 occurs in the body of s1's rule, or some shape mentioned
/// there depends on s2.
bool depends_on(const Schema& schema, ShapeId s1, ShapeId s2);
bool depends_on(const Schema& schema, const std::string& s1,
                const std::string& s2);

/// True iff some shape name depends on itself.
bool is_recursive(const Schema& schema);

/// Shape indices ordered so that every shape comes after the shapes its
/// body mentions. Empty result if the schema is recursive.
std::optional<std::vector<ShapeId>> topological_order(const Schema& schema);

}  // namespace rshacl

#endif  // RSHACL_SCHEMA_HPP
