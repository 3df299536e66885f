// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "rshacl/textio.hpp"
#include "support/gen.hpp"

namespace rshacl {
namespace {

using testsupport::fig1_graph;

TEST(GraphFormat, Fig1HasEightNodes) {
  Graph g = fig1_graph();
  EXPECT_EQ(g.domain_size(), 8u);
  EXPECT_EQ(g.property_names(),
            (std::vector<std::string>{"closeTo", "hasSymptoms",
                                      "vaccinated"}));
  EXPECT_TRUE(g.property("closeTo").contains(g.node("a"), g.node("b")));
  EXPECT_TRUE(g.property("closeTo").contains(g.node("b"), g.node("a")));
  EXPECT_EQ(g.property("closeTo").pair_count(), 12u);
}

TEST(GraphFormat, EmptyAndTinyFiles) {
  EXPECT_EQ(parse_graph("").domain_size(), 0u);
  Graph g = parse_graph("x p y\n");
  EXPECT_EQ(g.domain_size(), 2u);
  EXPECT_TRUE(g.property("p").contains(0, 1));
}

TEST(GraphFormat, DuplicateTriplesAreIdempotent) {
  Graph g = parse_graph("x p y\nx p y\n");
  EXPECT_EQ(g.property("p").pair_count(), 1u);
}

TEST(GraphFormat, MalformedLinesCarrySpans) {
  try {
    parse_graph("x p y\nx p\n", "bad.graph");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span.line, 2);
    EXPECT_EQ(e.span.file, "bad.graph");
  }
}

TEST(GraphFormat, RoundTripsThroughThePrinter) {
  Graph g = fig1_graph();
  EXPECT_TRUE(parse_graph(print_graph(g)) == g);
  Graph with_isolated = parse_graph("node lonely\nx p y\n");
  EXPECT_TRUE(parse_graph(print_graph(with_isolated)) == with_isolated);
}

TEST(SchemaFormat, ExampleOneParses) {
  Schema s = testsupport::example1_schema();
  ASSERT_EQ(s.shape_count(), 2u);
  EXPECT_EQ(s.shape_name(0), "atRisk");
  EXPECT_EQ(s.shape_name(1), "canWork");
  // not binds tighter than and, and the parenthesized or stays grouped.
  const ShapeExpr& body = *s.rule(0).body;
  ASSERT_EQ(body.kind, ShapeExpr::Kind::And);
  EXPECT_EQ(body.sub1->kind, ShapeExpr::Kind::Not);
  EXPECT_EQ(body.sub2->kind, ShapeExpr::Kind::Or);
}

TEST(SchemaFormat, DuplicateHeads) {
  try {
    parse_schema("shape s := top;\nshape s := top;", "dup.shapes");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span.line, 2);
    EXPECT_NE(std::string(e.what()).find("already defined"),
              std::string::npos);
  }
}

TEST(SchemaFormat, TargetsMayNotMentionShapes) {
  EXPECT_THROW(parse_schema("shape s := top; shape t := top;\n"
                            "target s <= t;"),
               ParseError);
  EXPECT_THROW(parse_schema("shape t := top;\ntarget ghost <= t;"),
               ParseError);
}

TEST(SchemaFormat, ZeroCardinalityIsRejected) {
  EXPECT_THROW(parse_schema("shape s := geq 0 (p, top);"), ParseError);
}

TEST(SchemaFormat, UndefinedBodyNamesAreRejectedWithSpans) {
  try {
    parse_schema("shape s := ghost;", "undef.shapes");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span.line, 1);
    EXPECT_GT(e.span.col_begin, 1);
  }
}

TEST(SchemaFormat, ReservedPrefixRejected) {
  EXPECT_THROW(parse_schema("shape _snf1 := top;"), ParseError);
}

TEST(SchemaFormat, PrecedenceAndPaths) {
  Schema s = parse_schema(
      "shape a := top and not top or top;\n"
      "shape b := geq 1 (p/q | ^r, top);\n"
      "shape c := forall ((p | q)*?, {n});\n"
      "shape d := closed();\n");
  EXPECT_EQ(s.rule(0).body->kind, ShapeExpr::Kind::Or);
  const PathExpr& pb = *s.rule(1).body->path1;
  ASSERT_EQ(pb.kind, PathExpr::Kind::Union);
  EXPECT_EQ(pb.lhs->kind, PathExpr::Kind::Compose);
  EXPECT_EQ(pb.rhs->kind, PathExpr::Kind::Inverse);
  const PathExpr& pc = *s.rule(2).body->path1;
  ASSERT_EQ(pc.kind, PathExpr::Kind::Optional);
  EXPECT_EQ(pc.lhs->kind, PathExpr::Kind::Star);
}

TEST(SchemaFormat, RoundTripIsAstIdentical) {
  for (const char* text :
       {"shape atRisk := not geq 1 (vaccinated, top) and (geq 1 "
        "(hasSymptoms, top) or geq 1 (closeTo, atRisk));\n"
        "shape canWork := not atRisk;\ntarget top <= canWork;",
        "shape a := top and not (top or {c});\n"
        "shape b := geq 2 (p/q | ^r, a or b) or forall (p*?, not a);\n"
        "shape c := eq(p, p/p) and disjoint(p | q, r) and closed(p, q);\n"
        "target geq 1 (p, top) <= c;"}) {
    Schema s = parse_schema(text);
    std::string printed = print_schema(s);
    Schema reparsed = parse_schema(printed);
    EXPECT_TRUE(reparsed == s) << printed;
    EXPECT_EQ(print_schema(reparsed), printed);
  }
}

TEST(SchemaFormat, RandomSchemasRoundTrip) {
  testsupport::Rng rng(83);
  testsupport::GenOptions opt;
  opt.with_targets = true;
  for (int i = 0; i < 60; ++i) {
    auto inst = testsupport::random_instance(rng, opt);
    std::string printed = print_schema(inst.schema);
    EXPECT_TRUE(parse_schema(printed) == inst.schema) << printed;
  }
}

TEST(SchemaFormat, ConstantsAreCheckedAgainstTheGraph) {
  Graph g = parse_graph("x p y\n");
  Schema ok = parse_schema("shape s := {x};");
  EXPECT_NO_THROW(check_constants(ok, g));
  Schema bad = parse_schema("shape s := {ghost};");
  EXPECT_THROW(check_constants(bad, g), EvalError);
}

// Deterministically garbled inputs must raise ParseError, never crash.
TEST(Fuzz, ParserOnlyEverThrowsParseErrors) {
  testsupport::Rng rng(89);
  const std::string alphabet =
      "abgeq (){};:=<.|/*?^_123 \nshape target top not and or closed";
  for (int i = 0; i < 500; ++i) {
    std::string text;
    std::size_t len = testsupport::pick(rng, 60);
    for (std::size_t k = 0; k < len; ++k)
      text += alphabet[testsupport::pick(
          rng, static_cast<std::uint32_t>(alphabet.size()))];
    try {
      parse_schema(text);
    } catch (const ParseError&) {
    }
    try {
      parse_graph(text);
    } catch (const ParseError&) {
    }
  }
}

TEST(Json, ReportIsVersionedAndOrdered) {
  Graph g = fig1_graph();
  Schema s = parse_schema(
      testsupport::read_file(testsupport::data_file("example1.shapes")) +
      "target top <= canWork;");
  ValidationReport r =
      validate(s, g, SemanticsKind::WellFounded, ValidationMode::Cautious);
  std::string json = report_to_json(r, s, g);
  EXPECT_NE(json.find("\"format\": 1"), std::string::npos);
  EXPECT_NE(json.find("\"witnesses\": [\n        \"d\",\n        \"e\",\n  "
                      "      \"f\"\n      ]"),
            std::string::npos);
  EXPECT_EQ(report_to_json(r, s, g), json);  // deterministic
}

}  // namespace
}  // namespace rshacl
