// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line driver: validate targets, list models, print the shape
// normal form, or compare the two stable semantics.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rshacl/fixpoint.hpp"
#include "rshacl/snf.hpp"
#include "rshacl/textio.hpp"
#include "rshacl/validate.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rshacl::Error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CommonArgs {
  std::string graph_file;
  std::string schema_file;
  bool json = false;
  std::uint64_t max_candidates = rshacl::EnumLimits{}.max_candidates;

  rshacl::EnumLimits limits() const { return {max_candidates}; }
};

void add_graph_schema(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--graph", args.graph_file, "graph file")->required();
  cmd->add_option("--schema", args.schema_file, "schema file")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"validation engine for recursive SHACL-style schemas"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string semantics_str;
  std::string mode_str;

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check the schema's targets");
  add_graph_schema(validate_cmd, args);
  validate_cmd
      ->add_option("--semantics", semantics_str, "wf, kk, stable, supported")
      ->required()
      ->check(CLI::IsMember({"wf", "kk", "stable", "supported"}));
  validate_cmd->add_option("--mode", mode_str, "brave or cautious")
      ->required()
      ->check(CLI::IsMember({"brave", "cautious"}));
  validate_cmd->add_flag("--json", args.json, "emit a JSON report");
  validate_cmd->add_option("--max-candidates", args.max_candidates,
                           "model-search cap");

  CLI::App* models_cmd =
      app.add_subcommand("models", "list all models of the schema");
  add_graph_schema(models_cmd, args);
  models_cmd
      ->add_option("--semantics", semantics_str, "stable or supported")
      ->required()
      ->check(CLI::IsMember({"stable", "supported"}));
  models_cmd->add_flag("--json", args.json, "emit JSON");
  models_cmd->add_option("--max-candidates", args.max_candidates,
                         "model-search cap");

  CLI::App* snf_cmd =
      app.add_subcommand("snf", "print the schema in shape normal form");
  snf_cmd->add_option("--schema", args.schema_file, "schema file")
      ->required();

  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "classify supported models under both stable semantics");
  add_graph_schema(compare_cmd, args);
  compare_cmd->add_flag("--json", args.json, "emit JSON");
  compare_cmd->add_option("--max-candidates", args.max_candidates,
                          "model-search cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (snf_cmd->parsed()) {
      rshacl::Schema schema =
          rshacl::parse_schema(slurp(args.schema_file), args.schema_file);
      std::cout << rshacl::print_schema(rshacl::to_snf(schema).schema);
      return 0;
    }

    rshacl::Graph graph =
        rshacl::parse_graph(slurp(args.graph_file), args.graph_file);
    rshacl::Schema schema =
        rshacl::parse_schema(slurp(args.schema_file), args.schema_file);
    rshacl::check_constants(schema, graph);

    if (validate_cmd->parsed()) {
      auto semantics = rshacl::semantics_from_string(semantics_str);
      auto mode = rshacl::mode_from_string(mode_str);
      rshacl::ValidationReport report = rshacl::validate(
          schema, graph, *semantics, *mode, args.limits());
      std::cout << (args.json
                        ? rshacl::report_to_json(report, schema, graph)
                        : rshacl::report_to_text(report, schema, graph));
      return report.pass ? 0 : 1;
    }
    if (models_cmd->parsed()) {
      auto semantics = rshacl::semantics_from_string(semantics_str);
      std::vector<rshacl::ShapeAssignment> models =
          *semantics == rshacl::SemanticsKind::Stable
              ? rshacl::enumerate_stable(schema, graph, args.limits())
              : rshacl::enumerate_supported(schema, graph, args.limits());
      std::cout << (args.json
                        ? rshacl::models_to_json(models, *semantics, schema,
                                                 graph)
                        : rshacl::models_to_text(models, schema, graph));
      return 0;
    }
    if (compare_cmd->parsed()) {
      rshacl::SemanticsComparison cmp =
          rshacl::compare_semantics(schema, graph, args.limits());
      std::cout << (args.json
                        ? rshacl::comparison_to_json(cmp, schema, graph)
                        : rshacl::comparison_to_text(cmp, schema, graph));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
