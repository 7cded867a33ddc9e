#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

std::string data(const std::string& name) { return std::string(MATHLOD_DATA_DIR) + "/" + name; }

Run run(const std::string& args) {
  const std::string cmd = std::string(MATHLOD_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string onto() { return "--ontology " + data("divisibility.ttl"); }
std::string mapping() { return "--mapping " + data("divisibility-mapping.json"); }
std::string lexicon() { return "--lexicon " + data("lexicon-en.ttl"); }

}  // namespace

TEST(Cli, TranslateRoleProperties) {
  auto r = run("translate 'Divides(m, n)' " + onto() + " " + mapping() + " --mode role-properties");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, oracle::read_golden("divides-roles.out"));
}

TEST(Cli, TranslateGenericAndOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "mathlod-cli-generic.ttl";
  auto r = run("translate 'Divides(m, n)' " + onto() + " " + mapping() + " --output " + path.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_TRUE(mathlod::rdf::graphs_isomorphic(mathlod::rdf::parse_turtle(text),
                                              mathlod::rdf::parse_turtle(oracle::read_golden("divides-generic.ttl"))));
  std::filesystem::remove(path);
}

TEST(Cli, TranslateErrors) {
  EXPECT_EQ(run("translate 'Divides(m)' " + onto() + " " + mapping()).code, 2);
  EXPECT_EQ(run("translate 'Divides(m, n)' " + onto() + " " + mapping() + " --mode sideways").code, 3);
  EXPECT_EQ(run("translate 'Divides(m, n)' --ontology " + data("missing.ttl") + " " + mapping()).code, 3);
  EXPECT_EQ(run("translate 'Divides(m, n)' " + onto()).code, 3);
  EXPECT_EQ(run("").code, 3);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, CheckCondition) {
  auto r = run("check-condition " + data("theory-empty.txt") + " 'Divides(m, n)' " + onto() + " " + mapping());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "PASS checked=32 strict=yes\n");
  auto d1 = run("check-condition " + data("theory-divides.txt") + " 'Divides(m, n)' " + onto() + " " + mapping() +
                " --domain-size 1 --mode role-properties");
  EXPECT_EQ(d1.out, "PASS checked=1 strict=yes\n");
  auto bad = run("check-condition " + data("theory-empty.txt") + " 'Divides(m, n)' --ontology " +
                 data("corrupted.ttl") + " " + mapping());
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out.rfind("FAIL checked=", 0), 0u);
  EXPECT_NE(bad.out.find("counterexample:"), std::string::npos);
  EXPECT_EQ(run("check-condition " + data("theory-empty.txt") + " 'Divides(m, n)' " + onto() + " " + mapping() +
                " --domain-size 4").code,
            3);
}

TEST(Cli, PhraseRoundTrip) {
  auto parsed = run("parse-phrase 'm divides n' " + data("entities.json") + " " + onto() + " " + lexicon());
  EXPECT_EQ(parsed.code, 0);
  EXPECT_EQ(parsed.out, oracle::read_golden("divides-roles.out"));

  const auto path = std::filesystem::temp_directory_path() / "mathlod-cli-instance.ttl";
  {
    std::ofstream out(path);
    out << parsed.out;
  }
  auto back = run("verbalize " + path.string() + " " + data("labels.json") + " " + onto() + " " + lexicon());
  EXPECT_EQ(back.code, 0);
  EXPECT_EQ(back.out, "m divides n\n");
  std::filesystem::remove(path);
}

TEST(Cli, PhraseErrors) {
  const std::string tail = " " + data("entities.json") + " " + onto();
  EXPECT_EQ(run("parse-phrase 'm multiplies n'" + tail + " " + lexicon()).code, 2);
  EXPECT_EQ(run("parse-phrase 'm divides q'" + tail + " " + lexicon()).code, 3);
  EXPECT_EQ(run("parse-phrase 'm divides n'" + tail + " --lexicon " + data("lexicon-unrepaired.ttl")).code, 2);
}

TEST(Cli, MatchTerms) {
  auto r = run("match-terms " + data("ontology-terms.txt") + " " + data("external-terms.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("summable series by Cesaro method\tCesaro summable series\t0.8660\tyes\tincomplete_label\n"),
            std::string::npos);
  EXPECT_NE(r.out.find("# external=7 matched=6 exact=1 incomplete_label=5 specific_vs_general=0\n"),
            std::string::npos);
  auto strict = run("match-terms " + data("ontology-terms.txt") + " " + data("external-terms.txt") +
                    " --threshold 0.85");
  EXPECT_NE(strict.out.find("# external=7 matched=3 "), std::string::npos);
  EXPECT_EQ(run("match-terms " + data("ontology-terms.txt") + " " + data("external-terms.txt") +
                " --threshold 2").code,
            3);
}

TEST(Cli, Validate) {
  EXPECT_EQ(run("validate " + onto()).code, 0);
  auto r = run("validate --ontology " + data("kindless-role.ttl"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("error\tRoleWithoutKindAncestor(Dividend)\t", 0), 0u);
  auto unary = run("validate --ontology " + data("unary.ttl"));
  EXPECT_EQ(unary.code, 0);
  EXPECT_EQ(unary.out.rfind("warning\t", 0), 0u);
}
