// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#include "support/reference.hpp"

#include <functional>

namespace rshacl::testsupport {

ShapeAssignment topological_extension(const Schema& schema, const Graph& g) {
  auto order = topological_order(schema);
  if (!order) throw Error("topological_extension needs a non-recursive schema");
  std::vector<ShapePtr> bodies;
  for (const auto& r : schema.rules()) bodies.push_back(r.body);
  ShapeEvalContext ctx(g, bodies, schema.mentioned_properties());
  ShapeAssignment a(schema.shape_count(), g.domain_size());
  for (ShapeId s : *order) a.at(s) = ctx.eval2(*schema.rule(s).body, a);
  return a;
}

ShapeAssignment brute_force_least_fixpoint(
    const std::function<ShapeAssignment(const ShapeAssignment&)>& f,
    std::size_t shape_count, std::size_t domain_size) {
  const std::size_t atoms = shape_count * domain_size;
  if (atoms > 16) throw Error("brute_force_least_fixpoint: instance too big");
  std::vector<ShapeAssignment> fixpoints;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms); ++mask) {
    ShapeAssignment a(shape_count, domain_size);
    for (std::size_t i = 0; i < atoms; ++i)
      if (mask >> i & 1)
        a.at(static_cast<ShapeId>(i / domain_size)).set(i % domain_size);
    if (f(a) == a) fixpoints.push_back(std::move(a));
  }
  if (fixpoints.empty())
    throw Error("brute_force_least_fixpoint: no fixpoint found");
  // The least fixpoint must be below every fixpoint in the sweep.
  for (const auto& candidate : fixpoints) {
    bool least = true;
    for (const auto& other : fixpoints)
      if (!assignment_leq_t(candidate, other)) least = false;
    if (least) return candidate;
  }
  throw Error("brute_force_least_fixpoint: fixpoints have no minimum");
}

}  // namespace rshacl::testsupport
