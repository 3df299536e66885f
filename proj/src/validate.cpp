// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#include "rshacl/validate.hpp"

namespace rshacl {

const char* to_string(ValidationMode m) {
  return m == ValidationMode::Brave ? "brave" : "cautious";
}

std::optional<ValidationMode> mode_from_string(const std::string& s) {
  if (s == "brave") return ValidationMode::Brave;
  if (s == "cautious") return ValidationMode::Cautious;
  return std::nullopt;
}

namespace {

std::vector<NodeId> members(const NodeSet& s) {
  std::vector<NodeId> out;
  for (auto b = s.find_first(); b != NodeSet::npos; b = s.find_next(b))
    out.push_back(static_cast<NodeId>(b));
  return out;
}

// "query and not s" for a target; nodes satisfying it violate the target.
ShapePtr violation_expr(const Schema& schema, const Target& t) {
  return and_(t.query, not_(resolved_name(schema.shape_name(t.shape),
                                          t.shape)));
}

}  // namespace

ValidationReport validate(const Schema& schema, const Graph& g,
                          SemanticsKind semantics, ValidationMode mode,
                          const EnumLimits& limits) {
  Engine engine(schema, g);
  ValidationReport report;
  report.semantics = semantics;
  report.mode = mode;

  std::vector<ShapePtr> checks;
  checks.reserve(schema.targets().size());
  for (const auto& t : schema.targets())
    checks.push_back(violation_expr(schema, t));
  ShapeEvalContext ctx(g, checks, schema.mentioned_properties());

  if (semantics == SemanticsKind::KripkeKleene ||
      semantics == SemanticsKind::WellFounded) {
    PartialInterpretation model = semantics == SemanticsKind::KripkeKleene
                                      ? engine.kripke_kleene()
                                      : engine.well_founded();
    for (const auto& check : checks) {
      SetPair v = ctx.eval_pair(*check, model.lower(), model.upper());
      TargetResult r;
      // Cautious: the violation must be false everywhere. Brave: it must
      // not be true anywhere.
      const NodeSet& offending =
          mode == ValidationMode::Cautious ? v.upper : v.lower;
      r.pass = offending.none();
      if (!r.pass) r.witnesses = members(offending);
      report.targets.push_back(std::move(r));
    }
    report.model = std::move(model);
  } else {
    std::vector<ShapeAssignment> models =
        semantics == SemanticsKind::Stable
            ? engine.enumerate_stable(limits)
            : engine.enumerate_supported(limits);
    // violations[m][t]: nodes of model m violating target t.
    std::vector<std::vector<NodeSet>> violations(models.size());
    for (std::size_t m = 0; m < models.size(); ++m)
      for (const auto& check : checks)
        violations[m].push_back(ctx.eval2(*check, models[m]));

    if (mode == ValidationMode::Cautious) {
      std::optional<std::size_t> first_failing;
      for (std::size_t t = 0; t < checks.size(); ++t) {
        TargetResult r;
        r.models_inspected = models.size();
        r.pass = true;
        for (std::size_t m = 0; m < models.size(); ++m) {
          if (violations[m][t].any()) {
            r.pass = false;
            r.witnesses = members(violations[m][t]);
            if (!first_failing) first_failing = m;
            break;
          }
        }
        report.targets.push_back(std::move(r));
      }
      if (first_failing) report.evidence_model = models[*first_failing];
    } else {
      // Brave: each target needs some model without violations. With no
      // models at all every target fails.
      for (std::size_t t = 0; t < checks.size(); ++t) {
        TargetResult r;
        r.models_inspected = models.size();
        r.pass = false;
        for (std::size_t m = 0; m < models.size(); ++m)
          if (violations[m][t].none()) {
            r.pass = true;
            break;
          }
        if (!r.pass && !models.empty()) r.witnesses = members(violations[0][t]);
        report.targets.push_back(std::move(r));
      }
      // A single model clearing every target, if any, is the evidence.
      for (std::size_t m = 0; m < models.size(); ++m) {
        bool all_clear = true;
        for (std::size_t t = 0; t < checks.size(); ++t)
          if (violations[m][t].any()) all_clear = false;
        if (all_clear) {
          report.evidence_model = models[m];
          break;
        }
      }
    }
  }

  report.pass = true;
  for (const auto& t : report.targets)
    if (!t.pass) report.pass = false;
  return report;
}

}  // namespace rshacl
