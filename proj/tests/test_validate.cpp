// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "rshacl/textio.hpp"
#include "rshacl/validate.hpp"
#include "support/gen.hpp"

namespace rshacl {
namespace {

using testsupport::fig1_graph;

Schema example1_with(const std::string& target_line) {
  return parse_schema(testsupport::read_file(
                          testsupport::data_file("example1.shapes")) +
                      target_line);
}

std::vector<std::string> witness_names(const Graph& g,
                                       const TargetResult& r) {
  std::vector<std::string> out;
  for (NodeId w : r.witnesses) out.push_back(g.node_name(w));
  return out;
}

TEST(Validate, EveryoneCanWorkFailsUnderWf) {
  Graph g = fig1_graph();
  Schema s = example1_with("target top <= canWork;");
  for (ValidationMode mode :
       {ValidationMode::Brave, ValidationMode::Cautious}) {
    ValidationReport r =
        validate(s, g, SemanticsKind::WellFounded, mode);
    EXPECT_FALSE(r.pass);
    ASSERT_EQ(r.targets.size(), 1u);
    EXPECT_EQ(witness_names(g, r.targets[0]),
              (std::vector<std::string>{"d", "e", "f"}));
  }
}

TEST(Validate, VaccinatedCanWorkPassesCautiouslyUnderWf) {
  Graph g = fig1_graph();
  Schema s =
      example1_with("target geq 1 (vaccinated, top) <= canWork;");
  ValidationReport r = validate(s, g, SemanticsKind::WellFounded,
                                ValidationMode::Cautious);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.targets[0].witnesses.empty());
}

TEST(Validate, UnknownAtomSplitsBraveAndCautiousUnderKk) {
  Graph g = fig1_graph();
  Schema s = example1_with("target {a} <= canWork;");
  ValidationReport brave =
      validate(s, g, SemanticsKind::KripkeKleene, ValidationMode::Brave);
  EXPECT_TRUE(brave.pass);
  ValidationReport cautious =
      validate(s, g, SemanticsKind::KripkeKleene, ValidationMode::Cautious);
  EXPECT_FALSE(cautious.pass);
  EXPECT_EQ(witness_names(g, cautious.targets[0]),
            (std::vector<std::string>{"a"}));
}

TEST(Validate, ModelSetSemanticsCountsModels) {
  Graph g = fig1_graph();
  Schema s = example1_with("target {a} <= canWork;");
  // atRisk(a) differs across the two supported models, so "a can work"
  // holds in one of them only.
  ValidationReport brave =
      validate(s, g, SemanticsKind::Supported, ValidationMode::Brave);
  EXPECT_TRUE(brave.pass);
  EXPECT_EQ(brave.targets[0].models_inspected, std::uint64_t{2});
  ASSERT_TRUE(brave.evidence_model.has_value());
  EXPECT_FALSE(
      brave.evidence_model->contains(*s.find_shape("atRisk"), g.node("a")));
  ValidationReport cautious =
      validate(s, g, SemanticsKind::Supported, ValidationMode::Cautious);
  EXPECT_FALSE(cautious.pass);
  ValidationReport stable_cautious =
      validate(s, g, SemanticsKind::Stable, ValidationMode::Cautious);
  EXPECT_TRUE(stable_cautious.pass);
  EXPECT_EQ(stable_cautious.targets[0].models_inspected, std::uint64_t{1});
}

TEST(Validate, EmptyModelSetPassesCautiouslyFailsBravely) {
  Graph g = parse_graph("node n\n");
  Schema s = parse_schema("shape s := not s; target top <= s;");
  ValidationReport cautious =
      validate(s, g, SemanticsKind::Stable, ValidationMode::Cautious);
  EXPECT_TRUE(cautious.pass);
  EXPECT_EQ(cautious.targets[0].models_inspected, std::uint64_t{0});
  ValidationReport brave =
      validate(s, g, SemanticsKind::Stable, ValidationMode::Brave);
  EXPECT_FALSE(brave.pass);
  EXPECT_TRUE(brave.targets[0].witnesses.empty());
}

TEST(Validate, CautiousPassImpliesBravePass) {
  testsupport::Rng rng(61);
  testsupport::GenOptions opt;
  opt.with_targets = true;
  for (int i = 0; i < 40; ++i) {
    auto inst = testsupport::random_instance(rng, opt);
    for (SemanticsKind k :
         {SemanticsKind::KripkeKleene, SemanticsKind::WellFounded,
          SemanticsKind::Stable, SemanticsKind::Supported}) {
      bool has_models = true;
      if (k == SemanticsKind::Stable)
        has_models = !enumerate_stable(inst.schema, inst.graph).empty();
      else if (k == SemanticsKind::Supported)
        has_models = !enumerate_supported(inst.schema, inst.graph).empty();
      ValidationReport cautious =
          validate(inst.schema, inst.graph, k, ValidationMode::Cautious);
      ValidationReport brave =
          validate(inst.schema, inst.graph, k, ValidationMode::Brave);
      if (cautious.pass && has_models) EXPECT_TRUE(brave.pass);
    }
  }
}

TEST(Validate, AllEightVerdictsAgreeOnNonRecursiveSchemas) {
  testsupport::Rng rng(67);
  testsupport::GenOptions opt;
  opt.non_recursive = true;
  opt.with_targets = true;
  for (int i = 0; i < 40; ++i) {
    auto inst = testsupport::random_instance(rng, opt);
    std::vector<bool> verdicts;
    for (SemanticsKind k :
         {SemanticsKind::KripkeKleene, SemanticsKind::WellFounded,
          SemanticsKind::Stable, SemanticsKind::Supported})
      for (ValidationMode m :
           {ValidationMode::Brave, ValidationMode::Cautious})
        verdicts.push_back(validate(inst.schema, inst.graph, k, m).pass);
    for (bool v : verdicts) EXPECT_EQ(v, verdicts[0]);
  }
}

TEST(Validate, WfCautiousImpliesStableCautiousWhenStableExists) {
  testsupport::Rng rng(71);
  testsupport::GenOptions opt;
  opt.with_targets = true;
  for (int i = 0; i < 40; ++i) {
    auto inst = testsupport::random_instance(rng, opt);
    if (enumerate_stable(inst.schema, inst.graph).empty()) continue;
    bool wf_cautious = validate(inst.schema, inst.graph,
                                SemanticsKind::WellFounded,
                                ValidationMode::Cautious)
                           .pass;
    bool st_cautious =
        validate(inst.schema, inst.graph, SemanticsKind::Stable,
                 ValidationMode::Cautious)
            .pass;
    if (wf_cautious) EXPECT_TRUE(st_cautious);
  }
}

}  // namespace
}  // namespace rshacl
