// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#include "rshacl/schema.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rshacl {

namespace {

ShapePtr resolve(const ShapePtr& e,
                 const std::map<std::string, ShapeId>& index) {
  if (!e) return e;
  if (e->kind == ShapeExpr::Kind::Name) {
    auto it = index.find(e->text);
    if (it == index.end())
      throw SchemaError("shape name '" + e->text + "' has no defining rule");
    if (e->shape == it->second) return e;
    return resolved_name(e->text, it->second, e->span);
  }
  ShapePtr s1 = resolve(e->sub1, index);
  ShapePtr s2 = resolve(e->sub2, index);
  if (s1 == e->sub1 && s2 == e->sub2) return e;
  auto copy = *e;
  copy.sub1 = std::move(s1);
  copy.sub2 = std::move(s2);
  return std::make_shared<ShapeExpr>(std::move(copy));
}

}  // namespace

std::optional<ShapeId> Schema::find_shape(const std::string& name) const {
  for (ShapeId s = 0; s < rules_.size(); ++s)
    if (rules_[s].head == name) return s;
  return std::nullopt;
}

std::vector<std::string> Schema::mentioned_properties() const {
  std::vector<std::string> props;
  for (const auto& r : rules_) collect_props(*r.body, props);
  for (const auto& t : targets_) collect_props(*t.query, props);
  std::sort(props.begin(), props.end());
  props.erase(std::unique(props.begin(), props.end()), props.end());
  return props;
}

bool Schema::operator==(const Schema& other) const {
  if (rules_.size() != other.rules_.size() ||
      targets_.size() != other.targets_.size())
    return false;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].head != other.rules_[i].head) return false;
    if (!same_shape(*rules_[i].body, *other.rules_[i].body)) return false;
  }
  for (std::size_t i = 0; i < targets_.size(); ++i) {
    if (targets_[i].shape_name != other.targets_[i].shape_name) return false;
    if (!same_shape(*targets_[i].query, *other.targets_[i].query))
      return false;
  }
  return true;
}

SchemaBuilder& SchemaBuilder::rule(std::string head, ShapePtr body) {
  rules_.push_back(Rule{std::move(head), std::move(body)});
  return *this;
}

SchemaBuilder& SchemaBuilder::target(ShapePtr query, std::string shape) {
  targets_.push_back(
      Target{std::move(query), kUnresolvedShape, std::move(shape)});
  return *this;
}

Schema SchemaBuilder::build() && {
  std::map<std::string, ShapeId> index;
  for (ShapeId s = 0; s < rules_.size(); ++s) {
    auto [it, fresh] = index.emplace(rules_[s].head, s);
    if (!fresh)
      throw SchemaError("shape '" + rules_[s].head +
                        "' is defined by more than one rule");
  }
  Schema schema;
  schema.rules_.reserve(rules_.size());
  for (auto& r : rules_)
    schema.rules_.push_back(Rule{std::move(r.head), resolve(r.body, index)});
  for (auto& t : targets_) {
    std::vector<std::string> mentioned;
    collect_shape_names(*t.query, mentioned);
    for (const auto& m : mentioned) {
      if (index.count(m))
        throw SchemaError("target query mentions shape name '" + m + "'");
      throw SchemaError("target query mentions undefined name '" + m + "'");
    }
    auto it = index.find(t.shape_name);
    if (it == index.end())
      throw SchemaError("target refers to undefined shape '" + t.shape_name +
                        "'");
    schema.targets_.push_back(
        Target{std::move(t.query), it->second, std::move(t.shape_name)});
  }
  return schema;
}

namespace {

std::vector<std::vector<ShapeId>> mention_edges(const Schema& schema) {
  std::vector<std::vector<ShapeId>> out(schema.shape_count());
  for (ShapeId s = 0; s < schema.shape_count(); ++s) {
    std::vector<std::string> names;
    collect_shape_names(*schema.rule(s).body, names);
    std::set<ShapeId> uniq;
    for (const auto& n : names) uniq.insert(*schema.find_shape(n));
    out[s].assign(uniq.begin(), uniq.end());
  }
  return out;
}

bool reachable(const std::vector<std::vector<ShapeId>>& edges, ShapeId from,
               ShapeId to) {
  std::vector<bool> seen(edges.size(), false);
  std::vector<ShapeId> stack{from};
  while (!stack.empty()) {
    ShapeId cur = stack.back();
    stack.pop_back();
    for (ShapeId next : edges[cur]) {
      if (next == to) return true;
      if (!seen[next]) {
        seen[next] = true;
        stack.push_back(next);
      }
    }
  }
  return false;
}

}  // namespace

bool depends_on(const Schema& schema, ShapeId s1, ShapeId s2) {
  if (s1 >= schema.shape_count() || s2 >= schema.shape_count())
    throw SchemaError("depends_on: shape index out of range");
  return reachable(mention_edges(schema), s1, s2);
}

bool depends_on(const Schema& schema, const std::string& s1,
                const std::string& s2) {
  auto a = schema.find_shape(s1);
  auto b = schema.find_shape(s2);
  if (!a || !b)
    throw SchemaError("depends_on: unknown shape name '" + (a ? s2 : s1) +
                      "'");
  return depends_on(schema, *a, *b);
}

bool is_recursive(const Schema& schema) {
  auto edges = mention_edges(schema);
  for (ShapeId s = 0; s < schema.shape_count(); ++s)
    if (reachable(edges, s, s)) return true;
  return false;
}

std::optional<std::vector<ShapeId>> topological_order(const Schema& schema) {
  auto edges = mention_edges(schema);
  std::vector<int> state(schema.shape_count(), 0);  // 0 new, 1 open, 2 done
  std::vector<ShapeId> order;
  // Iterative DFS; a back edge means recursion.
  for (ShapeId root = 0; root < schema.shape_count(); ++root) {
    if (state[root] != 0) continue;
    std::vector<std::pair<ShapeId, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [cur, next] = stack.back();
      if (next < edges[cur].size()) {
        ShapeId child = edges[cur][next++];
        if (state[child] == 1) return std::nullopt;
        if (state[child] == 0) {
          state[child] = 1;
          stack.emplace_back(child, 0);
        }
      } else {
        state[cur] = 2;
        order.push_back(cur);
        stack.pop_back();
      }
    }
  }
  return order;
}

}  // namespace rshacl
