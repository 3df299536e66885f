// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RSHACL_RELATION_HPP
#define RSHACL_RELATION_HPP

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <utility>
#include <vector>

namespace rshacl {

using NodeId = std::uint32_t;

/// A set of nodes, positional over the graph's ordered domain.
using NodeSet = boost::dynamic_bitset<>;

inline NodeSet full_set(std::size_t n) { return NodeSet(n).set(); }

/// A binary relation over a fixed domain, stored row-wise: row(a) is the
/// image {b | (a,b) in R}.
class BinaryRelation {
 public:
  BinaryRelation() = default;
  explicit BinaryRelation(std::size_t n) : rows_(n, NodeSet(n)) {}

  std::size_t domain_size() const { return rows_.size(); }

  void add(NodeId a, NodeId b) { rows_[a].set(b); }
  bool contains(NodeId a, NodeId b) const { return rows_[a].test(b); }

  const NodeSet& row(NodeId a) const { return rows_[a]; }
  NodeSet& row(NodeId a) { return rows_[a]; }

  std::size_t pair_count() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.count();
    return n;
  }

  std::vector<std::pair<NodeId, NodeId>> pairs() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    for (NodeId a = 0; a < rows_.size(); ++a)
      for (auto b = rows_[a].find_first(); b != NodeSet::npos;
           b = rows_[a].find_next(b))
        out.emplace_back(a, static_cast<NodeId>(b));
    return out;
  }

  BinaryRelation inverse() const {
    BinaryRelation out(rows_.size());
    for (NodeId a = 0; a < rows_.size(); ++a)
      for (auto b = rows_[a].find_first(); b != NodeSet::npos;
           b = rows_[a].find_next(b))
        out.rows_[b].set(a);
    return out;
  }

  BinaryRelation unite(const BinaryRelation& other) const {
    BinaryRelation out(rows_.size());
    for (std::size_t a = 0; a < rows_.size(); ++a)
      out.rows_[a] = rows_[a] | other.rows_[a];
    return out;
  }

  BinaryRelation compose(const BinaryRelation& other) const {
    BinaryRelation out(rows_.size());
    for (NodeId a = 0; a < rows_.size(); ++a)
      for (auto b = rows_[a].find_first(); b != NodeSet::npos;
           b = rows_[a].find_next(b))
        out.rows_[a] |= other.rows_[b];
    return out;
  }

  /// Least reflexive and transitive relation containing this one.
  BinaryRelation reflexive_transitive_closure() const {
    BinaryRelation out = *this;
    const std::size_t n = rows_.size();
    for (NodeId k = 0; k < n; ++k)
      for (NodeId a = 0; a < n; ++a)
        if (out.rows_[a].test(k)) out.rows_[a] |= out.rows_[k];
    for (NodeId a = 0; a < n; ++a) out.rows_[a].set(a);
    return out;
  }

  BinaryRelation with_identity() const {
    BinaryRelation out = *this;
    for (NodeId a = 0; a < rows_.size(); ++a) out.rows_[a].set(a);
    return out;
  }

  bool operator==(const BinaryRelation& other) const {
    return rows_ == other.rows_;
  }

 private:
  std::vector<NodeSet> rows_;
};

}  // namespace rshacl

#endif  // RSHACL_RELATION_HPP
