// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RSHACL_GRAPH_HPP
#define RSHACL_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rshacl/errors.hpp"
#include "rshacl/relation.hpp"

namespace rshacl {

/// A finite graph-interpretation: an ordered domain of named nodes plus one
/// binary relation per property name. Every node name doubles as a constant.
/// Immutable once built; building goes through add_node/add_edge.
class Graph {
 public:
  /// Interns a node name, returning its dense index.
  NodeId add_node(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    NodeId id = static_cast<NodeId>(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    for (auto& [p, rel] : props_) grow(rel);
    return id;
  }

  /// Adds (a, b) to property p, interning all three names. Duplicate
  /// triples are accepted idempotently.
  void add_edge(const std::string& subject, const std::string& prop,
                const std::string& object) {
    NodeId a = add_node(subject);
    NodeId b = add_node(object);
    auto it = props_.find(prop);
    if (it == props_.end())
      it = props_.emplace(prop, BinaryRelation(names_.size())).first;
    it->second.add(a, b);
  }

  std::size_t domain_size() const { return names_.size(); }

  const std::string& node_name(NodeId id) const { return names_[id]; }

  std::optional<NodeId> find_node(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  NodeId node(const std::string& name) const {
    auto id = find_node(name);
    if (!id) throw EvalError("unknown constant '" + name + "'");
    return *id;
  }

  bool has_property(const std::string& prop) const {
    return props_.count(prop) > 0;
  }

  /// Relation of a property name. Names absent from the graph denote the
  /// empty relation.
  const BinaryRelation& property(const std::string& prop) const {
    auto it = props_.find(prop);
    if (it != props_.end()) return it->second;
    if (empty_.domain_size() != names_.size())
      empty_ = BinaryRelation(names_.size());
    return empty_;
  }

  /// Property names present in the graph, in lexicographic order.
  std::vector<std::string> property_names() const {
    std::vector<std::string> out;
    out.reserve(props_.size());
    for (const auto& [p, rel] : props_) out.push_back(p);
    return out;
  }

  const std::map<std::string, BinaryRelation>& properties() const {
    return props_;
  }

  bool operator==(const Graph& other) const {
    return names_ == other.names_ && props_ == other.props_;
  }

 private:
  void grow(BinaryRelation& rel) {
    if (rel.domain_size() == names_.size()) return;
    BinaryRelation bigger(names_.size());
    for (NodeId a = 0; a < rel.domain_size(); ++a)
      for (auto b = rel.row(a).find_first(); b != NodeSet::npos;
           b = rel.row(a).find_next(b))
        bigger.add(a, static_cast<NodeId>(b));
    rel = std::move(bigger);
  }

  std::vector<std::string> names_;  // domain, in first-mention order
  std::unordered_map<std::string, NodeId> index_;
  std::map<std::string, BinaryRelation> props_;
  mutable BinaryRelation empty_;
};

}  // namespace rshacl

#endif  // RSHACL_GRAPH_HPP
