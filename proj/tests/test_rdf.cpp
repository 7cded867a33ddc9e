#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace mathlod;
using namespace mathlod::rdf;

namespace {

Iri ex(const std::string& local) { return Iri("http://example.org/a#" + local); }

}  // namespace

TEST(Terms, IriValidation) {
  EXPECT_NO_THROW(Iri("http://ontomathpro.org/omp2#Dividend"));
  EXPECT_NO_THROW(Iri("urn:isbn:123"));
  EXPECT_THROW(Iri(""), ContractError);
  EXPECT_THROW(Iri("relative/path"), ContractError);
  EXPECT_THROW(Iri("http://a b"), ContractError);
  Iri i("http://ontomathpro.org/omp2#Dividend");
  EXPECT_EQ(i.local_name(), "Dividend");
  EXPECT_EQ(i.namespace_part(), "http://ontomathpro.org/omp2#");
}

TEST(Terms, BlankAndLiteral) {
  EXPECT_THROW(BlankNode(""), ContractError);
  EXPECT_THROW(BlankNode("a-b"), ContractError);
  EXPECT_THROW(Literal("x", std::string("en"), ex("t")), ContractError);
  EXPECT_THROW(Literal::lang("x", "1en"), ContractError);
  EXPECT_NO_THROW(Literal::lang("x", "en-GB"));
  EXPECT_THROW(Triple(Literal("x"), ex("p"), ex("o")), ContractError);
}

TEST(Graph, SetSemanticsAndOrder) {
  RdfGraph g;
  EXPECT_TRUE(g.add(ex("s"), ex("p"), ex("o")));
  EXPECT_FALSE(g.add(ex("s"), ex("p"), ex("o")));
  g.add(BlankNode("b"), ex("p"), Literal("v"));
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.match(std::nullopt, ex("p"), std::nullopt).size(), 2u);
  EXPECT_EQ(g.objects(ex("s"), ex("p")).size(), 1u);
  EXPECT_EQ(g.blank_nodes().size(), 1u);
  EXPECT_TRUE(g.remove(Triple(ex("s"), ex("p"), ex("o"))));
  EXPECT_EQ(g.size(), 1u);
  EXPECT_THROW(g.set_prefix("1x", "http://x/"), ContractError);
}

TEST(Turtle, ParsesLexiconListingShape) {
  const std::string text = oracle::read_data("lexicon-unrepaired.ttl");
  RdfGraph g = parse_turtle(text);
  EXPECT_EQ(g.prefix_namespace("").value(), "http://ontomathpro.org/lexicons/");
  const Iri entry("http://ontomathpro.org/lexicons/EN-v-divide");
  EXPECT_EQ(g.objects(entry, vocab::ontolex("canonicalForm")).size(), 1u);
  // five anonymous submaps plus the shared _:Relationship1
  const auto submaps = g.objects(Iri("http://ontomathpro.org/lexicons/EN-v-divide-sense1"), vocab::synsem("submap"));
  EXPECT_EQ(submaps.size(), 5u);
  EXPECT_EQ(g.blank_nodes().size(), 6u);
}

TEST(Turtle, SerializesCanonically) {
  RdfGraph g;
  vocab::apply_prefixes(g, vocab::template_prefixes());
  g.set_prefix("", "http://ontomathpro.org/instances/");
  g.add(BlankNode("rel"), vocab::type(), vocab::omp("Divisibility_relationship"));
  g.add(BlankNode("rel"), vocab::omp("divisor"), Iri("http://ontomathpro.org/instances/m"));
  g.add(Iri("http://ontomathpro.org/instances/m"), vocab::label(), Literal::lang("m \"one\"", "en"));
  EXPECT_EQ(serialize_turtle(g),
            "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n"
            "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
            "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
            "@prefix omp: <http://ontomathpro.org/omp2#> .\n"
            "@prefix : <http://ontomathpro.org/instances/> .\n"
            "\n"
            "_:rel rdf:type omp:Divisibility_relationship ;\n"
            "    omp:divisor :m .\n"
            "\n"
            ":m rdfs:label \"m \\\"one\\\"\"@en .\n");
}

TEST(Turtle, ErrorsCarryPositions) {
  try {
    parse_turtle("@prefix ex: <http://e/> .\nex:a ex:b \"unterminated .\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 0u);
  }
  EXPECT_THROW(parse_turtle("nope:a <http://e/p> <http://e/o> ."), ParseError);
  EXPECT_THROW(parse_turtle("<http://e/s> <http://e/p> <http://e/o>"), ParseError);
  EXPECT_THROW(parse_turtle("<http://e/s> <http://e/p> ( <http://e/o> ) ."), ParseError);
}

TEST(Turtle, AnonymousNodesAvoidExplicitLabels) {
  RdfGraph g = parse_turtle(
      "@prefix ex: <http://e/> .\n"
      "_:b1 ex:p [ ex:q ex:o ] .\n");
  EXPECT_EQ(g.blank_nodes().size(), 2u);
}

TEST(Turtle, RoundTripRandomGraphs) {
  std::mt19937 rng(20240611);
  for (int k = 0; k < 50; ++k) {
    RdfGraph g = oracle::random_graph(rng);
    const std::string first = serialize_turtle(g);
    RdfGraph back = parse_turtle(first);
    ASSERT_TRUE(graphs_isomorphic(g, back)) << first;
    ASSERT_TRUE(oracle::isomorphic(g, back)) << first;
    ASSERT_EQ(serialize_turtle(back), first);
  }
}

TEST(Isomorphism, AgreesWithBruteForce) {
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    RdfGraph g = oracle::random_graph(rng, 8);
    RdfGraph s = oracle::scramble(g, rng);
    EXPECT_TRUE(graphs_isomorphic(g, s));
    RdfGraph h = oracle::random_graph(rng, 8);
    EXPECT_EQ(graphs_isomorphic(g, h), oracle::isomorphic(g, h));
  }
}

TEST(Isomorphism, DistinguishesBlankStructure) {
  RdfGraph a, b;
  a.add(BlankNode("x"), ex("p"), BlankNode("y"));
  a.add(BlankNode("y"), ex("p"), BlankNode("x"));
  b.add(BlankNode("x"), ex("p"), BlankNode("x"));
  b.add(BlankNode("y"), ex("p"), BlankNode("y"));
  EXPECT_FALSE(graphs_isomorphic(a, b));
  EXPECT_FALSE(oracle::isomorphic(a, b));
}

namespace {

// C subClassOf D; p domain C.
RdfGraph small_schema() {
  RdfGraph s;
  s.add(ex("C"), vocab::sub_class_of(), ex("D"));
  s.add(ex("p"), vocab::domain(), ex("C"));
  return s;
}

}  // namespace

TEST(Semantics, SatisfactionWithBlankNodes) {
  RdfInterpretation i;
  auto c = i.add_resource("C");
  auto d = i.add_resource("D");
  auto p = i.add_resource("p");
  auto x = i.add_resource("x");
  i.iri_denotation = {{ex("C"), c}, {ex("D"), d}, {ex("p"), p}};
  i.add_to_class(c, x);
  i.add_to_class(d, x);
  i.add_pair(p, x, x);

  RdfGraph g;
  g.add(BlankNode("b"), ex("p"), BlankNode("b"));
  g.add(BlankNode("b"), vocab::type(), ex("C"));
  EXPECT_TRUE(rdf_satisfies(i, g, small_schema()));
  EXPECT_TRUE(oracle::satisfies(i, g, small_schema()));

  i.class_ext[d].clear();  // breaks C subClassOf D
  EXPECT_FALSE(rdf_satisfies(i, g, small_schema()));
  EXPECT_FALSE(oracle::satisfies(i, g, small_schema()));
}

TEST(Semantics, MissingDenotationIsContractError) {
  RdfInterpretation i;
  i.add_resource("x");
  RdfGraph g;
  g.add(ex("a"), ex("p"), ex("b"));
  EXPECT_THROW(rdf_satisfies(i, g, RdfGraph()), ContractError);
  RdfGraph lit;
  lit.add(BlankNode("b"), ex("p"), Literal("v"));
  EXPECT_THROW(rdf_satisfies(i, lit, RdfGraph()), ContractError);
}

TEST(Semantics, EnumeratorAgreesWithOracle) {
  struct Case {
    RdfGraph graph;
    RdfGraph schema;
    std::size_t max_domain;
  };
  std::vector<Case> cases;
  {
    RdfGraph g;
    g.add(BlankNode("r"), vocab::type(), ex("C"));
    RdfGraph s;
    s.add(ex("C"), vocab::sub_class_of(), ex("D"));
    cases.push_back({g, RdfGraph(), 2});
    cases.push_back({g, s, 2});
  }
  {
    RdfGraph g;
    g.add(BlankNode("r"), ex("p"), ex("a"));
    RdfGraph s;
    s.add(ex("p"), vocab::sub_property_of(), ex("q"));
    cases.push_back({g, s, 0});
  }
  {
    RdfGraph g;
    g.add(ex("a"), ex("p"), BlankNode("x"));
    g.add(BlankNode("x"), ex("p"), ex("a"));
    cases.push_back({g, RdfGraph(), 2});
  }
  for (const auto& c : cases) {
    for (std::size_t d = 0; d <= c.max_domain; ++d) {
      auto e = enumerate_rdf_models(c.graph, c.schema, d);
      std::size_t count = 0;
      while (auto m = e.next()) {
        ++count;
        EXPECT_TRUE(oracle::satisfies(*m, c.graph, c.schema));
      }
      EXPECT_EQ(count, oracle::count_rdf_models(c.graph, c.schema, d)) << serialize_turtle(c.graph) << " d=" << d;
    }
  }
}

TEST(Semantics, EnumerationCaps) {
  RdfGraph g;
  for (int k = 0; k < 13; ++k) g.add(ex("s" + std::to_string(k)), vocab::type(), ex("C"));
  EXPECT_THROW(enumerate_rdf_models(g, RdfGraph(), 0), SizeError);
  RdfGraph one;
  one.add(ex("a"), ex("p"), ex("b"));
  EXPECT_THROW(enumerate_rdf_models(one, RdfGraph(), 5), SizeError);
  EXPECT_THROW(enumerate_rdf_models(one, RdfGraph(), 3), SizeError);  // 6 resources -> 36 pair bits
}
