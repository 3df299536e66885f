// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#include "rshacl/oracle.hpp"

#include <algorithm>

namespace rshacl {

namespace {

std::vector<ShapePtr> bodies_of(const Schema& schema) {
  std::vector<ShapePtr> out;
  for (const auto& r : schema.rules()) out.push_back(r.body);
  return out;
}

ShapeAssignment from_mask(std::uint64_t mask, std::size_t shapes,
                          std::size_t domain) {
  ShapeAssignment a(shapes, domain);
  for (std::size_t i = 0; i < shapes * domain; ++i)
    if (mask >> i & 1)
      a.at(static_cast<ShapeId>(i / domain)).set(i % domain);
  return a;
}

}  // namespace

std::vector<ShapeAssignment> oracle_supported(const Schema& schema,
                                              const Graph& g) {
  const std::size_t shapes = schema.shape_count();
  const std::size_t domain = g.domain_size();
  const std::size_t atoms = shapes * domain;
  if (atoms > 20)
    throw ResourceError("oracle_supported is capped at 20 atoms, got " +
                        std::to_string(atoms));
  ShapeEvalContext ctx(g, bodies_of(schema), schema.mentioned_properties());

  std::vector<ShapeAssignment> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms); ++mask) {
    ShapeAssignment a = from_mask(mask, shapes, domain);
    bool fixed = true;
    for (ShapeId s = 0; s < shapes && fixed; ++s)
      fixed = ctx.eval2(*schema.rule(s).body, a) == a.at(s);
    if (fixed) out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartialInterpretation> oracle_partial_stable(const Schema& schema,
                                                         const Graph& g) {
  const std::size_t shapes = schema.shape_count();
  const std::size_t domain = g.domain_size();
  const std::size_t atoms = shapes * domain;
  if (atoms > 12)
    throw ResourceError("oracle_partial_stable is capped at 12 atoms, got " +
                        std::to_string(atoms));
  ShapeEvalContext ctx(g, bodies_of(schema), schema.mentioned_properties());

  // Least fixpoint of one side of the rule application with the other bound
  // frozen, by plain iteration from the empty assignment.
  auto inner_lfp = [&](const ShapeAssignment& frozen, bool lower_side) {
    ShapeAssignment cur(shapes, domain);
    for (;;) {
      ShapeAssignment next(shapes, domain);
      for (ShapeId s = 0; s < shapes; ++s) {
        SetPair v = lower_side
                        ? ctx.eval_pair(*schema.rule(s).body, cur, frozen)
                        : ctx.eval_pair(*schema.rule(s).body, frozen, cur);
        next.at(s) = lower_side ? std::move(v.lower) : std::move(v.upper);
      }
      if (next == cur) return cur;
      cur = std::move(next);
    }
  };

  std::vector<PartialInterpretation> out;
  std::vector<std::uint8_t> digits(atoms, 0);
  for (;;) {
    ShapeAssignment lower(shapes, domain), upper(shapes, domain);
    for (std::size_t i = 0; i < atoms; ++i) {
      ShapeId s = static_cast<ShapeId>(i / domain);
      NodeId b = static_cast<NodeId>(i % domain);
      if (digits[i] >= 1) upper.at(s).set(b);
      if (digits[i] == 2) lower.at(s).set(b);
    }
    if (inner_lfp(upper, true) == lower && inner_lfp(lower, false) == upper)
      out.emplace_back(lower, upper);
    std::size_t i = 0;
    while (i < atoms && digits[i] == 2) digits[i++] = 0;
    if (i == atoms) break;
    ++digits[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rshacl
