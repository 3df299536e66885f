// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "rshacl/fixpoint.hpp"
#include "rshacl/snf.hpp"
#include "rshacl/textio.hpp"
#include "support/gen.hpp"

namespace rshacl {
namespace {

using testsupport::example1_schema;
using testsupport::example2_schema;

Schema two_rules() {
  return parse_schema("shape a := b; shape b := top;");
}

TEST(Schema, DependsOnFollowsBodyMentions) {
  Schema s = two_rules();
  EXPECT_TRUE(depends_on(s, "a", "b"));
  EXPECT_FALSE(depends_on(s, "b", "a"));
  EXPECT_FALSE(depends_on(s, "a", "a"));
  EXPECT_THROW(depends_on(s, "a", "zz"), SchemaError);
}

TEST(Schema, SelfRuleDependsOnItself) {
  Schema s = parse_schema("shape s := s;");
  EXPECT_TRUE(depends_on(s, "s", "s"));
  EXPECT_TRUE(is_recursive(s));
}

TEST(Schema, DependencyIsTransitive) {
  Schema s = parse_schema("shape a := b; shape b := c; shape c := top;");
  EXPECT_TRUE(depends_on(s, "a", "c"));
}

TEST(Schema, RecursionDetection) {
  EXPECT_TRUE(is_recursive(example1_schema()));
  EXPECT_TRUE(is_recursive(example2_schema()));
  EXPECT_FALSE(is_recursive(two_rules()));
  EXPECT_FALSE(is_recursive(SchemaBuilder().build()));
}

TEST(Schema, DuplicateHeadIsRejected) {
  EXPECT_THROW(
      std::move(SchemaBuilder().rule("s", top()).rule("s", top())).build(),
      SchemaError);
}

TEST(Schema, UndefinedBodyNameIsRejected) {
  EXPECT_THROW(std::move(SchemaBuilder().rule("s", name("ghost"))).build(),
               SchemaError);
}

TEST(Schema, TargetQueriesAreShapeFree) {
  SchemaBuilder b;
  b.rule("s", top());
  b.target(name("s"), "s");
  EXPECT_THROW(std::move(b).build(), SchemaError);
}

TEST(Snf, DecomposesNestedBodies) {
  Schema s = parse_schema("shape s := not geq 1 (p, top);");
  SnfResult r = to_snf(s);
  EXPECT_TRUE(is_snf(r.schema));
  EXPECT_EQ(r.schema.shape_count(), 3u);
  EXPECT_EQ(r.original_count, 1u);
  Schema expected = parse_schema(
      "shape s := not _snf1; shape _snf1 := geq 1 (p, _snf2); "
      "shape _snf2 := top;",
      "<expected>", ParseOptions{.allow_reserved_names = true});
  EXPECT_TRUE(r.schema == expected);
}

TEST(Snf, AlreadyNormalIsUnchanged) {
  Schema s = parse_schema(
      "shape a := not b; shape b := a and a; shape c := geq 2 (p, a); "
      "shape d := forall (p, b); shape e := top; shape f := {x} ;"
      "shape g := eq(p, q); shape h := disjoint(p, q); shape i := closed();"
      "shape j := a or b;");
  EXPECT_TRUE(is_snf(s));
  SnfResult r = to_snf(s);
  EXPECT_TRUE(r.schema == s);
  EXPECT_TRUE(r.introduced.empty());
}

TEST(Snf, BareAliasGetsANormalForm) {
  Schema s = parse_schema("shape a := top; shape b := a;");
  EXPECT_FALSE(is_snf(s));
  SnfResult r = to_snf(s);
  EXPECT_TRUE(is_snf(r.schema));
  // b := a and a keeps the alias semantics without a new name.
  EXPECT_EQ(r.schema.shape_count(), 2u);
}

TEST(Snf, OutputAlwaysSatisfiesThePredicate) {
  testsupport::Rng rng(7);
  testsupport::GenOptions opt;
  for (int i = 0; i < 60; ++i) {
    auto inst = testsupport::random_instance(rng, opt);
    SnfResult r = to_snf(inst.schema);
    EXPECT_TRUE(is_snf(r.schema));
    // Idempotence modulo bookkeeping: a second pass adds no rules.
    EXPECT_EQ(to_snf(r.schema).schema.shape_count(), r.schema.shape_count());
  }
}

TEST(Snf, FreshNamesAreRejectedByDefaultButAcceptedWhenAsked) {
  Schema s = parse_schema("shape s := not geq 1 (p, top);");
  std::string printed = print_schema(to_snf(s).schema);
  EXPECT_THROW(parse_schema(printed), ParseError);
  Schema reloaded = parse_schema(printed, "<snf>",
                                 ParseOptions{.allow_reserved_names = true});
  EXPECT_TRUE(reloaded == to_snf(s).schema);
}

// Restricting any supported model of the normal form to the original names
// yields a supported model of the input, and every supported model of the
// input extends uniquely. The same does NOT hold for the well-founded
// model: naming the inner negation of a double negation splits one rule
// into two mutually negative ones, whose loop the well-founded model leaves
// unknown. The minimal refutation is s := not not s.
TEST(Snf, SupportedModelsAreConservedWellFoundedIsNot) {
  testsupport::Rng rng(11);
  testsupport::GenOptions opt;
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    auto inst = testsupport::random_instance(rng, opt);
    SnfResult r = to_snf(inst.schema);
    if (r.schema.shape_count() * inst.graph.domain_size() > 18) continue;
    ++checked;
    auto original = enumerate_supported(inst.schema, inst.graph);
    auto snf_models = enumerate_supported(r.schema, inst.graph);
    std::vector<ShapeAssignment> restricted;
    for (const auto& m : snf_models)
      restricted.push_back(restrict_assignment(m, r.original_count));
    std::sort(restricted.begin(), restricted.end());
    restricted.erase(std::unique(restricted.begin(), restricted.end()),
                     restricted.end());
    EXPECT_EQ(restricted, original);
    EXPECT_EQ(snf_models.size(), original.size());  // unique extensions
  }
  EXPECT_GE(checked, 10);

  Graph one_node = parse_graph("node n\n");
  Schema double_neg = parse_schema("shape s := not not s;");
  SnfResult snf = to_snf(double_neg);
  PartialInterpretation wf_original = well_founded(double_neg, one_node);
  PartialInterpretation wf_snf = well_founded(snf.schema, one_node);
  EXPECT_TRUE(wf_original.is_exact());
  EXPECT_EQ(wf_original.value(0, 0), TruthValue::False);
  EXPECT_EQ(wf_snf.value(0, 0), TruthValue::Unknown);
}

}  // namespace
}  // namespace rshacl
