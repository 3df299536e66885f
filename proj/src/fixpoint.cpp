// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#include "rshacl/fixpoint.hpp"

#include <algorithm>

namespace rshacl {

const char* to_string(SemanticsKind k) {
  switch (k) {
    case SemanticsKind::Supported:
      return "supported";
    case SemanticsKind::Stable:
      return "stable";
    case SemanticsKind::WellFounded:
      return "wf";
    default:
      return "kk";
  }
}

std::optional<SemanticsKind> semantics_from_string(const std::string& s) {
  if (s == "supported") return SemanticsKind::Supported;
  if (s == "stable") return SemanticsKind::Stable;
  if (s == "wf") return SemanticsKind::WellFounded;
  if (s == "kk") return SemanticsKind::KripkeKleene;
  return std::nullopt;
}

ShapeAssignment lfp_monotone(
    const std::function<ShapeAssignment(const ShapeAssignment&)>& f,
    std::size_t shape_count, std::size_t domain_size) {
  ShapeAssignment cur = ShapeAssignment::bottom(shape_count, domain_size);
  const std::size_t cap = shape_count * domain_size + 1;
  for (std::size_t i = 0; i <= cap; ++i) {
    ShapeAssignment next = f(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw InternalError(
      "least-fixpoint iteration did not stabilize within the lattice height; "
      "the operator is not monotone");
}

namespace {

std::vector<ShapePtr> rule_bodies(const Schema& schema) {
  std::vector<ShapePtr> bodies;
  bodies.reserve(schema.shape_count());
  for (const auto& r : schema.rules()) bodies.push_back(r.body);
  return bodies;
}

}  // namespace

Engine::Engine(const Schema& schema, const Graph& graph)
    : schema_(&schema),
      graph_(&graph),
      ctx_(graph, rule_bodies(schema), schema.mentioned_properties()) {}

void Engine::check_assignment(const ShapeAssignment& a) const {
  if (a.shape_count() != shape_count() || a.domain_size() != domain_size())
    throw VocabularyError(
        "assignment does not match the schema vocabulary and graph domain");
}

ShapeAssignment Engine::apply2(const ShapeAssignment& a) const {
  ShapeAssignment out(shape_count(), domain_size());
  for (ShapeId s = 0; s < shape_count(); ++s)
    out.at(s) = ctx_.eval2(*schema_->rule(s).body, a);
  return out;
}

Engine::RawPair Engine::apply_pair(const ShapeAssignment& lower,
                                   const ShapeAssignment& upper) const {
  RawPair out{ShapeAssignment(shape_count(), domain_size()),
              ShapeAssignment(shape_count(), domain_size())};
  for (ShapeId s = 0; s < shape_count(); ++s) {
    SetPair v = ctx_.eval_pair(*schema_->rule(s).body, lower, upper);
    out.lower.at(s) = std::move(v.lower);
    out.upper.at(s) = std::move(v.upper);
  }
  return out;
}

ShapeAssignment Engine::t_op(const ShapeAssignment& a) const {
  check_assignment(a);
  return apply2(a);
}

PartialInterpretation Engine::psi_op(const PartialInterpretation& p) const {
  check_assignment(p.lower());
  RawPair out = apply_pair(p.lower(), p.upper());
  if (!assignment_leq_t(out.lower, out.upper))
    throw InternalError("psi_op produced an inconsistent pair");
  return PartialInterpretation(std::move(out.lower), std::move(out.upper));
}

PartialInterpretation Engine::kripke_kleene() const {
  PartialInterpretation cur = least_precise();
  const std::size_t cap = 2 * shape_count() * domain_size() + 2;
  for (std::size_t i = 0; i <= cap; ++i) {
    PartialInterpretation next = psi_op(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw InternalError("Kripke-Kleene iteration did not stabilize");
}

ShapeAssignment Engine::lfp_lower_given_upper(
    const ShapeAssignment& upper) const {
  // lfp of z -> psi(z, upper).lower; the pair may be temporarily
  // inconsistent, which the paired evaluator tolerates.
  ShapeAssignment cur = bottom();
  const std::size_t cap = shape_count() * domain_size() + 1;
  for (std::size_t i = 0; i <= cap; ++i) {
    ShapeAssignment next = apply_pair(cur, upper).lower;
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw InternalError("inner lower fixpoint did not stabilize");
}

ShapeAssignment Engine::lfp_upper_given_lower(
    const ShapeAssignment& lower) const {
  ShapeAssignment cur = bottom();
  const std::size_t cap = shape_count() * domain_size() + 1;
  for (std::size_t i = 0; i <= cap; ++i) {
    ShapeAssignment next = apply_pair(lower, cur).upper;
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw InternalError("inner upper fixpoint did not stabilize");
}

PartialInterpretation Engine::stable_revision(
    const PartialInterpretation& p) const {
  check_assignment(p.lower());
  ShapeAssignment lower = lfp_lower_given_upper(p.upper());
  ShapeAssignment upper = lfp_upper_given_lower(p.lower());
  if (!assignment_leq_t(lower, upper))
    throw InternalError("stable revision produced an inconsistent pair");
  return PartialInterpretation(std::move(lower), std::move(upper));
}

PartialInterpretation Engine::well_founded() const {
  PartialInterpretation cur = least_precise();
  const std::size_t cap = 2 * shape_count() * domain_size() + 2;
  for (std::size_t i = 0; i <= cap; ++i) {
    PartialInterpretation next = stable_revision(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw InternalError("well-founded iteration did not stabilize");
}

bool Engine::is_stable(const ShapeAssignment& a) const {
  check_assignment(a);
  if (!(apply2(a) == a)) return false;
  return lfp_lower_given_upper(a) == a;
}

namespace {

struct SearchPair {
  ShapeAssignment lower, upper;
};

// Finds the first undecided (shape, node) atom, in vocabulary then domain
// order.
std::optional<std::pair<ShapeId, NodeId>> first_unknown(const SearchPair& p) {
  for (ShapeId s = 0; s < p.lower.shape_count(); ++s) {
    NodeSet open = p.upper.at(s) - p.lower.at(s);
    auto b = open.find_first();
    if (b != NodeSet::npos) return std::make_pair(s, static_cast<NodeId>(b));
  }
  return std::nullopt;
}

}  // namespace

std::vector<ShapeAssignment> Engine::enumerate_supported(
    const EnumLimits& limits) const {
  std::vector<ShapeAssignment> found;
  std::uint64_t candidates = 0;

  // Narrows the pair with one simultaneous rule application; every t_op
  // fixpoint refining the pair also refines the result. Returns false on
  // contradiction.
  auto propagate = [&](SearchPair& p) {
    for (;;) {
      RawPair step = apply_pair(p.lower, p.upper);
      bool changed = false;
      for (ShapeId s = 0; s < shape_count(); ++s) {
        NodeSet lo = p.lower.at(s) | step.lower.at(s);
        NodeSet hi = p.upper.at(s) & step.upper.at(s);
        if (lo != p.lower.at(s) || hi != p.upper.at(s)) {
          p.lower.at(s) = std::move(lo);
          p.upper.at(s) = std::move(hi);
          changed = true;
        }
      }
      for (ShapeId s = 0; s < shape_count(); ++s)
        if (!p.lower.at(s).is_subset_of(p.upper.at(s))) return false;
      if (!changed) return true;
    }
  };

  std::vector<SearchPair> stack;
  stack.push_back({bottom(), top_assignment()});
  while (!stack.empty()) {
    SearchPair p = std::move(stack.back());
    stack.pop_back();
    if (!propagate(p)) continue;
    auto open = first_unknown(p);
    if (!open) {
      if (++candidates > limits.max_candidates)
        throw ResourceError(
            "supported-model search exceeded the cap of " +
            std::to_string(limits.max_candidates) +
            " candidates; raise --max-candidates to search further");
      if (apply2(p.lower) == p.lower) found.push_back(p.lower);
      continue;
    }
    auto [s, b] = *open;
    SearchPair as_false = p;
    as_false.upper.at(s).reset(b);
    SearchPair as_true = std::move(p);
    as_true.lower.at(s).set(b);
    stack.push_back(std::move(as_false));
    stack.push_back(std::move(as_true));
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<ShapeAssignment> Engine::enumerate_stable(
    const EnumLimits& limits) const {
  std::vector<ShapeAssignment> out;
  for (const auto& m : enumerate_supported(limits))
    if (is_stable(m)) out.push_back(m);
  return out;
}

std::vector<PartialInterpretation> Engine::enumerate_partial_stable(
    const EnumLimits& limits) const {
  const std::size_t atoms = shape_count() * domain_size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < atoms && total <= limits.max_candidates; ++i)
    total *= 3;
  if (total > limits.max_candidates)
    throw ResourceError(
        "partial-stable sweep needs 3^" + std::to_string(atoms) +
        " candidates, over the cap of " +
        std::to_string(limits.max_candidates) +
        "; raise --max-candidates to search further");

  std::vector<PartialInterpretation> out;
  std::vector<std::uint8_t> digits(atoms, 0);  // 0 false, 1 unknown, 2 true
  for (std::uint64_t step = 0;; ++step) {
    ShapeAssignment lower(shape_count(), domain_size());
    ShapeAssignment upper(shape_count(), domain_size());
    for (std::size_t i = 0; i < atoms; ++i) {
      ShapeId s = static_cast<ShapeId>(i / domain_size());
      NodeId b = static_cast<NodeId>(i % domain_size());
      if (digits[i] >= 1) upper.at(s).set(b);
      if (digits[i] == 2) lower.at(s).set(b);
    }
    PartialInterpretation p(std::move(lower), std::move(upper));
    if (stable_revision(p) == p) out.push_back(std::move(p));
    // base-3 odometer
    std::size_t i = 0;
    while (i < atoms && digits[i] == 2) digits[i++] = 0;
    if (i == atoms) break;
    ++digits[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

ShapeAssignment t_op(const Schema& schema, const Graph& g,
                     const ShapeAssignment& a) {
  return Engine(schema, g).t_op(a);
}
PartialInterpretation psi_op(const Schema& schema, const Graph& g,
                             const PartialInterpretation& p) {
  return Engine(schema, g).psi_op(p);
}
PartialInterpretation kripke_kleene(const Schema& schema, const Graph& g) {
  return Engine(schema, g).kripke_kleene();
}
PartialInterpretation stable_revision(const Schema& schema, const Graph& g,
                                      const PartialInterpretation& p) {
  return Engine(schema, g).stable_revision(p);
}
PartialInterpretation well_founded(const Schema& schema, const Graph& g) {
  return Engine(schema, g).well_founded();
}
bool is_stable(const Schema& schema, const Graph& g,
               const ShapeAssignment& a) {
  return Engine(schema, g).is_stable(a);
}
std::vector<ShapeAssignment> enumerate_supported(const Schema& schema,
                                                 const Graph& g,
                                                 const EnumLimits& limits) {
  return Engine(schema, g).enumerate_supported(limits);
}
std::vector<ShapeAssignment> enumerate_stable(const Schema& schema,
                                              const Graph& g,
                                              const EnumLimits& limits) {
  return Engine(schema, g).enumerate_stable(limits);
}
std::vector<PartialInterpretation> enumerate_partial_stable(
    const Schema& schema, const Graph& g, const EnumLimits& limits) {
  return Engine(schema, g).enumerate_partial_stable(limits);
}

}  // namespace rshacl
