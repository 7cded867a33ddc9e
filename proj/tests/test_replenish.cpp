#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"

using namespace mathlod;
using namespace mathlod::replenish;

using Tokens = std::vector<std::string>;

namespace {

// Plain dot-product-over-norms on count maps.
double reference_cosine(const Tokens& a, const Tokens& b) {
  std::map<std::string, int> ca, cb;
  for (const auto& t : a) ++ca[t];
  for (const auto& t : b) ++cb[t];
  long dot = 0, na = 0, nb = 0;
  for (const auto& [t, n] : ca) {
    na += n * n;
    auto it = cb.find(t);
    if (it != cb.end()) dot += n * it->second;
  }
  for (const auto& [t, n] : cb) nb += n * n;
  return static_cast<double>(dot) / std::sqrt(static_cast<double>(na * nb));
}

Tokens random_tokens(std::mt19937& rng, int vocab, int max_len) {
  Tokens out(1 + rng() % max_len);
  for (auto& t : out) t = "w" + std::to_string(rng() % vocab);
  return out;
}

}  // namespace

TEST(Preprocess, Examples) {
  auto cfg = PreprocessConfig::defaults();
  EXPECT_EQ(preprocess("Riemann--Stieltjes probability integral", cfg),
            (Tokens{"riemann", "stieltjes", "probability", "integral"}));
  EXPECT_EQ(preprocess("summable series by Cesaro method", cfg),
            (Tokens{"summable", "series", "cesaro", "method"}));
  EXPECT_EQ(preprocess("The Adams formulas.", cfg), (Tokens{"adams", "formula"}));
  EXPECT_EQ(preprocess("Римана–Стилтьеса интеграл", cfg), (Tokens{"римана", "стилтьеса", "интеграл"}));
  EXPECT_TRUE(preprocess("of the", cfg).empty());

  PreprocessConfig raw;
  raw.lowercase = false;
  raw.strip_punctuation = false;
  EXPECT_EQ(preprocess("A-b c", raw), (Tokens{"A-b", "c"}));
}

TEST(Preprocess, CustomStopWordsAndLemmatizer) {
  PreprocessConfig cfg;
  cfg.set_stop_words({"Method"});
  cfg.lemmatizer = std::make_shared<CallbackLemmatizer>("strip-s", [](const std::string& t) {
    return t.size() > 1 && t.back() == 's' ? t.substr(0, t.size() - 1) : t;
  });
  EXPECT_EQ(preprocess("integrals method", cfg), Tokens{"integral"});
  EXPECT_EQ(cfg.lemmatizer->name(), "strip-s");
}

TEST(Cosine, HandComputedPairs) {
  auto cfg = PreprocessConfig::defaults();
  auto sim = [&](const char* a, const char* b) { return cosine(preprocess(a, cfg), preprocess(b, cfg)); };
  EXPECT_NEAR(sim("interpolation formula", "Stormer interpolation formula"), 2.0 / std::sqrt(6.0), 1e-9);
  EXPECT_NEAR(sim("Riemann--Stieltjes integral", "Riemann--Stieltjes probability integral"),
              3.0 / std::sqrt(12.0), 1e-9);
  EXPECT_NEAR(sim("Adams formula", "Adams interpolation formula"), 2.0 / std::sqrt(6.0), 1e-9);
  EXPECT_NEAR(sim("Cesaro summable series", "summable series by Cesaro method"), 3.0 / std::sqrt(12.0), 1e-9);
  EXPECT_NEAR(sim("interpolation formula", "Gaussian interpolation formula"), 2.0 / std::sqrt(6.0), 1e-9);
}

TEST(Cosine, Properties) {
  std::mt19937 rng(5150);
  for (int k = 0; k < 500; ++k) {
    auto a = random_tokens(rng, 8, 6);
    auto b = random_tokens(rng, 8, 6);
    EXPECT_NEAR(cosine(a, a), 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(cosine(a, b), cosine(b, a));
    EXPECT_NEAR(cosine(a, b), reference_cosine(a, b), 1e-12);
    std::set<std::string> va(a.begin(), a.end());
    bool disjoint = std::none_of(b.begin(), b.end(), [&](const std::string& t) { return va.count(t) > 0; });
    EXPECT_EQ(cosine(a, b) == 0.0, disjoint);
  }
  EXPECT_THROW(cosine({}, {"x"}), DegenerateInputError);
  EXPECT_THROW(cosine({"x"}, {}), DegenerateInputError);
}

TEST(Match, FixtureTermPairs) {
  auto results = match_terms(text::read_lines(oracle::read_data("ontology-terms.txt")),
                             text::read_lines(oracle::read_data("external-terms.txt")), 0.7,
                             PreprocessConfig::defaults());
  ASSERT_EQ(results.size(), 7u);
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"Riemann--Stieltjes probability integral", "Riemann--Stieltjes integral"},
      {"summable series by Cesaro method", "Cesaro summable series"},
      {"Stormer interpolation formula", "interpolation formula"},
      {"Gaussian interpolation formula", "interpolation formula"},
      {"Adams interpolation formula", "Adams formula"},
      {"prime number", "prime number"}};
  for (std::size_t k = 0; k < expected.size(); ++k) {
    EXPECT_EQ(results[k].external_term.raw, expected[k].first);
    EXPECT_EQ(results[k].ontology_term.raw, expected[k].second);
    EXPECT_TRUE(results[k].matched);
    EXPECT_GE(results[k].similarity, 0.7);
  }
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(results[k].category, MatchCategory::incomplete_label);
  EXPECT_EQ(results[5].category, MatchCategory::exact);
  EXPECT_FALSE(results[6].matched);
  EXPECT_FALSE(results[6].category.has_value());

  auto s = summarize(results);
  EXPECT_EQ(s.matched, 6u);
  EXPECT_EQ(s.exact, 1u);
  EXPECT_EQ(s.incomplete_label, 5u);
  const std::string report = format_report(results);
  EXPECT_NE(report.find("Stormer interpolation formula\tinterpolation formula\t0.8165\tyes\tincomplete_label\n"),
            std::string::npos);
  EXPECT_NE(report.find("# external=7 matched=6 exact=1 incomplete_label=5 specific_vs_general=0\n"),
            std::string::npos);
}

TEST(Match, Categories) {
  EXPECT_EQ(categorize({"a", "b"}, {"a", "b"}, 1.0), MatchCategory::exact);
  EXPECT_EQ(categorize({"a"}, {"a", "b"}, 0.7071), MatchCategory::incomplete_label);
  EXPECT_EQ(categorize({"a", "b", "c"}, {"a", "b"}, 0.8165), MatchCategory::incomplete_label);
  EXPECT_EQ(categorize({"a", "b", "c"}, {"a", "b", "d"}, 0.6667), MatchCategory::specific_vs_general);
  EXPECT_EQ(categorize({"a", "a"}, {"a", "b"}, 0.7071), MatchCategory::specific_vs_general);
}

TEST(Match, TiesGoToSmallerRawString) {
  auto cfg = PreprocessConfig::defaults();
  auto r = match_terms(Tokens{"zeta formula", "alpha formula"}, Tokens{"formula"}, 0.7, cfg);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].ontology_term.raw, "alpha formula");
  auto again = match_terms(Tokens{"alpha formula", "zeta formula"}, Tokens{"formula"}, 0.7, cfg);
  EXPECT_EQ(again[0].ontology_term.raw, "alpha formula");
}

TEST(Match, ThresholdMonotonicity) {
  std::mt19937 rng(8086);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<TermRecord> onto, ext;
    for (int k = 0; k < 6; ++k) onto.push_back({"o" + std::to_string(k), TermSource::ontology, random_tokens(rng, 6, 4)});
    for (int k = 0; k < 8; ++k) ext.push_back({"e" + std::to_string(k), TermSource::external, random_tokens(rng, 6, 4)});
    std::size_t previous = ext.size() + 1;
    for (double t : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
      auto s = summarize(match_terms(onto, ext, t));
      EXPECT_LE(s.matched, previous);
      previous = s.matched;
    }
  }
}

TEST(Match, DegenerateAndConfigErrors) {
  auto cfg = PreprocessConfig::defaults();
  auto r = match_terms(Tokens{"prime number", "the"}, Tokens{"of", "prime numbers"}, 0.7, cfg);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].category, MatchCategory::exact);
  EXPECT_THROW(match_terms(Tokens{"x"}, Tokens{"x"}, 0.0, cfg), ConfigError);
  EXPECT_THROW(match_terms(Tokens{"x"}, Tokens{"x"}, 1.5, cfg), ConfigError);
  EXPECT_THROW(match_terms(Tokens{"the", "of"}, Tokens{"x"}, 0.7, cfg), ConfigError);
  EXPECT_TRUE(match_terms(Tokens{"x"}, Tokens{}, 0.7, cfg).empty());
}
