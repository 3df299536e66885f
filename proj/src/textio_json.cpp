// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include "json.hpp"
#include "rshacl/textio.hpp"

namespace rshacl {

namespace {

using Json = nlohmann::ordered_json;

Json names_of(const NodeSet& s, const Graph& g) {
  Json out = Json::array();
  for (auto b = s.find_first(); b != NodeSet::npos; b = s.find_next(b))
    out.push_back(g.node_name(static_cast<NodeId>(b)));
  return out;
}

Json assignment_json(const ShapeAssignment& a, const Schema& schema,
                     const Graph& g) {
  Json out = Json::object();
  for (ShapeId s = 0; s < a.shape_count(); ++s)
    out[schema.shape_name(s)] = names_of(a.at(s), g);
  return out;
}

Json partial_json(const PartialInterpretation& p, const Schema& schema,
                  const Graph& g) {
  Json out = Json::object();
  for (ShapeId s = 0; s < p.shape_count(); ++s) {
    Json entry = Json::object();
    entry["true"] = names_of(p.lower().at(s), g);
    entry["unknown"] = names_of(p.upper().at(s) - p.lower().at(s), g);
    entry["false"] = names_of(~p.upper().at(s), g);
    out[schema.shape_name(s)] = std::move(entry);
  }
  return out;
}

}  // namespace

std::string report_to_json(const ValidationReport& report,
                           const Schema& schema, const Graph& g) {
  Json out;
  out["format"] = 1;
  out["command"] = "validate";
  out["semantics"] = to_string(report.semantics);
  out["mode"] = to_string(report.mode);
  out["pass"] = report.pass;
  Json targets = Json::array();
  for (std::size_t i = 0; i < report.targets.size(); ++i) {
    const auto& t = schema.targets()[i];
    const auto& r = report.targets[i];
    Json entry;
    entry["query"] = print_shape(*t.query);
    entry["shape"] = t.shape_name;
    entry["pass"] = r.pass;
    Json witnesses = Json::array();
    for (NodeId w : r.witnesses) witnesses.push_back(g.node_name(w));
    entry["witnesses"] = std::move(witnesses);
    entry["models_inspected"] =
        r.models_inspected ? Json(*r.models_inspected) : Json(nullptr);
    targets.push_back(std::move(entry));
  }
  out["targets"] = std::move(targets);
  out["model"] =
      report.model ? partial_json(*report.model, schema, g) : Json(nullptr);
  out["evidence_model"] =
      report.evidence_model
          ? assignment_json(*report.evidence_model, schema, g)
          : Json(nullptr);
  return out.dump(2) + "\n";
}

std::string models_to_json(const std::vector<ShapeAssignment>& models,
                           SemanticsKind semantics, const Schema& schema,
                           const Graph& g) {
  Json out;
  out["format"] = 1;
  out["command"] = "models";
  out["semantics"] = to_string(semantics);
  out["count"] = models.size();
  Json ms = Json::array();
  for (const auto& m : models) ms.push_back(assignment_json(m, schema, g));
  out["models"] = std::move(ms);
  return out.dump(2) + "\n";
}

std::string comparison_to_json(const SemanticsComparison& cmp,
                               const Schema& schema, const Graph& g) {
  Json out;
  out["format"] = 1;
  out["command"] = "compare";
  out["snf"] = cmp.snf;
  out["supported_count"] = cmp.supported_count;
  out["aft_stable_count"] = cmp.aft_stable_count;
  out["acorss_stable_count"] = cmp.acorss_stable_count;
  Json models = Json::array();
  for (const auto& c : cmp.models) {
    Json entry;
    entry["assignment"] = assignment_json(c.model, schema, g);
    entry["aft_stable"] = c.aft_stable;
    entry["acorss_stable"] = c.acorss_stable;
    if (c.levels) {
      Json levels = Json::object();
      for (ShapeId s = 0; s < schema.shape_count(); ++s) {
        Json per_node = Json::object();
        for (auto a = c.model.at(s).find_first(); a != NodeSet::npos;
             a = c.model.at(s).find_next(a))
          per_node[g.node_name(static_cast<NodeId>(a))] =
              c.levels->levels[s][a];
        levels[schema.shape_name(s)] = std::move(per_node);
      }
      entry["levels"] = std::move(levels);
    } else {
      entry["levels"] = nullptr;
    }
    entry["stable_lfp_lower"] =
        c.stable_lfp ? assignment_json(*c.stable_lfp, schema, g)
                     : Json(nullptr);
    models.push_back(std::move(entry));
  }
  out["models"] = std::move(models);
  return out.dump(2) + "\n";
}

std::string report_to_text(const ValidationReport& report,
                           const Schema& schema, const Graph& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < report.targets.size(); ++i) {
    const auto& t = schema.targets()[i];
    const auto& r = report.targets[i];
    os << "target " << (i + 1) << " (" << print_shape(*t.query)
       << " <= " << t.shape_name << "): " << (r.pass ? "pass" : "fail");
    if (!r.witnesses.empty()) {
      os << " [witnesses:";
      for (NodeId w : r.witnesses) os << " " << g.node_name(w);
      os << "]";
    }
    if (r.models_inspected)
      os << " (" << *r.models_inspected << " models inspected)";
    os << "\n";
  }
  os << "validation: " << (report.pass ? "pass" : "fail") << " ("
     << to_string(report.semantics) << ", " << to_string(report.mode)
     << ")\n";
  return os.str();
}

std::string models_to_text(const std::vector<ShapeAssignment>& models,
                           const Schema& schema, const Graph& g) {
  std::ostringstream os;
  if (models.empty()) {
    os << "no models\n";
    return os.str();
  }
  for (std::size_t i = 0; i < models.size(); ++i) {
    os << "model " << (i + 1) << ":\n";
    os << print_assignment(models[i], schema, g, "  ");
  }
  return os.str();
}

std::string comparison_to_text(const SemanticsComparison& cmp,
                               const Schema& schema, const Graph& g) {
  std::ostringstream os;
  os << "supported models: " << cmp.supported_count
     << (cmp.snf ? " (schema in shape normal form)" : "") << "\n";
  os << "AFT-stable: " << cmp.aft_stable_count
     << ", ACORSS-stable: " << cmp.acorss_stable_count << "\n";
  for (std::size_t i = 0; i < cmp.models.size(); ++i) {
    const auto& c = cmp.models[i];
    os << "model " << (i + 1) << " [aft-stable: " << (c.aft_stable ? "yes" : "no")
       << ", acorss-stable: " << (c.acorss_stable ? "yes" : "no") << "]:\n";
    os << print_assignment(c.model, schema, g, "  ");
  }
  return os.str();
}

}  // namespace rshacl
