#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mathlod/error.hpp"
#include "mathlod/text.hpp"

namespace mathlod::replenish {

class Lemmatizer {
 public:
  virtual ~Lemmatizer() = default;
  virtual std::string name() const = 0;
  virtual std::string lemma(const std::string& token) const = 0;
};

class IdentityLemmatizer final : public Lemmatizer {
 public:
  std::string name() const override { return "identity"; }
  std::string lemma(const std::string& token) const override { return token; }
};

/// Table lookup with identity fallback.
class DictionaryLemmatizer final : public Lemmatizer {
 public:
  explicit DictionaryLemmatizer(std::map<std::string, std::string> table) : table_(std::move(table)) {}

  /// Small English table of plural nouns and verb inflections.
  static std::shared_ptr<DictionaryLemmatizer> english() {
    static const std::map<std::string, std::string> kTable = {
        {"formulas", "formula"},     {"formulae", "formula"},       {"integrals", "integral"},
        {"numbers", "number"},       {"series", "series"},          {"matrices", "matrix"},
        {"functions", "function"},   {"polynomials", "polynomial"}, {"methods", "method"},
        {"equations", "equation"},   {"theorems", "theorem"},       {"spaces", "space"},
        {"sets", "set"},             {"groups", "group"},           {"rings", "ring"},
        {"fields", "field"},         {"operators", "operator"},     {"vectors", "vector"},
        {"derivatives", "derivative"}, {"roots", "root"},           {"points", "point"},
        {"lines", "line"},           {"curves", "curve"},           {"surfaces", "surface"},
        {"coefficients", "coefficient"}, {"variables", "variable"}, {"values", "value"},
        {"degrees", "degree"},       {"divisors", "divisor"},       {"dividends", "dividend"},
        {"sequences", "sequence"},   {"limits", "limit"},           {"bases", "basis"},
        {"axes", "axis"},            {"vertices", "vertex"},        {"indices", "index"},
        {"radii", "radius"},         {"loci", "locus"},             {"maxima", "maximum"},
        {"minima", "minimum"},       {"divides", "divide"},         {"divided", "divide"},
        {"dividing", "divide"},      {"integrates", "integrate"},   {"integrated", "integrate"},
        {"converges", "converge"},   {"converged", "converge"},     {"converging", "converge"},
        {"summable", "summable"},    {"interpolating", "interpolate"}};
    return std::make_shared<DictionaryLemmatizer>(kTable);
  }

  std::string name() const override { return "dictionary"; }
  std::string lemma(const std::string& token) const override {
    auto it = table_.find(token);
    return it == table_.end() ? token : it->second;
  }

 private:
  std::map<std::string, std::string> table_;
};

/// Delegates to a caller-supplied normalizer, e.g. one for Russian.
class CallbackLemmatizer final : public Lemmatizer {
 public:
  CallbackLemmatizer(std::string name, std::function<std::string(const std::string&)> fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}
  std::string name() const override { return name_; }
  std::string lemma(const std::string& token) const override { return fn_(token); }

 private:
  std::string name_;
  std::function<std::string(const std::string&)> fn_;
};

inline const std::set<std::string>& default_stop_words() {
  static const std::set<std::string> kWords = {"a",  "an", "the", "of",   "by",   "in",  "on",
                                               "for", "to", "and", "or", "with", "at", "from"};
  return kWords;
}

struct PreprocessConfig {
  std::set<std::string> stop_words;
  std::shared_ptr<const Lemmatizer> lemmatizer = std::make_shared<IdentityLemmatizer>();
  bool lowercase = true;
  bool strip_punctuation = true;

  static PreprocessConfig defaults() {
    PreprocessConfig cfg;
    cfg.stop_words = default_stop_words();
    cfg.lemmatizer = DictionaryLemmatizer::english();
    return cfg;
  }

  /// Stop words are stored lowercased.
  void set_stop_words(const std::vector<std::string>& words) {
    stop_words.clear();
    for (const auto& w : words) stop_words.insert(text::lowercase(w));
  }
};

/// Unicode P* code points (the common blocks) plus hyphen and dashes.
inline bool is_punctuation(char32_t c) {
  if (c < 0x80) {
    switch (c) {
      case '!': case '"': case '#': case '%': case '&': case '\'': case '(': case ')':
      case '*': case ',': case '-': case '.': case '/': case ':': case ';': case '?':
      case '@': case '[': case '\\': case ']': case '_': case '{': case '}':
        return true;
      default:
        return false;
    }
  }
  switch (c) {
    case 0xA1: case 0xA7: case 0xAB: case 0xAD: case 0xB6: case 0xB7: case 0xBB: case 0xBF:
    case 0x37E: case 0x387: case 0x2E17:
      return true;
    default:
      break;
  }
  if (c >= 0x2010 && c <= 0x2027) return true;
  if (c >= 0x2030 && c <= 0x205E) return true;
  if (c == 0x207D || c == 0x207E || c == 0x208D || c == 0x208E) return true;
  if (c >= 0x2308 && c <= 0x230B) return true;
  if (c == 0x2329 || c == 0x232A) return true;
  if (c >= 0x2768 && c <= 0x2775) return true;
  if (c >= 0x27E6 && c <= 0x27EF) return true;
  if (c >= 0x2983 && c <= 0x2998) return true;
  if (c >= 0x2E00 && c <= 0x2E4F) return true;
  if (c >= 0x3001 && c <= 0x3003) return true;
  if (c >= 0x3008 && c <= 0x3011) return true;
  if (c >= 0x3014 && c <= 0x301F) return true;
  if (c >= 0xFE10 && c <= 0xFE19) return true;
  if (c >= 0xFE30 && c <= 0xFE4F) return true;
  if (c >= 0xFF01 && c <= 0xFF0F && c != 0xFF04 && c != 0xFF0B) return true;
  return false;
}

inline std::vector<std::string> preprocess(std::string_view raw, const PreprocessConfig& cfg) {
  std::string cleaned;
  cleaned.reserve(raw.size());
  for (char32_t c : text::decode_utf8(raw)) {
    if (cfg.strip_punctuation && is_punctuation(c)) c = U' ';
    if (cfg.lowercase) c = text::to_lower(c);
    text::append_utf8(cleaned, c);
  }
  std::vector<std::string> out;
  for (auto& tok : text::split_whitespace(cleaned)) {
    if (cfg.stop_words.count(cfg.lowercase ? tok : text::lowercase(tok))) continue;
    out.push_back(cfg.lemmatizer ? cfg.lemmatizer->lemma(tok) : tok);
  }
  return out;
}

/// Term-frequency cosine. Throws DegenerateInputError on an empty side.
inline double cosine(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) throw DegenerateInputError("cosine of an empty token list");
  std::unordered_map<std::string, std::pair<double, double>> tf;
  for (const auto& t : a) tf[t].first += 1;
  for (const auto& t : b) tf[t].second += 1;
  double dot = 0, na = 0, nb = 0;
  for (const auto& [tok, v] : tf) {
    dot += v.first * v.second;
    na += v.first * v.first;
    nb += v.second * v.second;
  }
  double r = dot / (std::sqrt(na) * std::sqrt(nb));
  return std::clamp(r, 0.0, 1.0);
}

enum class TermSource { ontology, external };

struct TermRecord {
  std::string raw;
  TermSource source = TermSource::external;
  std::vector<std::string> tokens;

  bool degenerate() const noexcept { return tokens.empty(); }
};

inline TermRecord make_term(std::string raw, TermSource source, const PreprocessConfig& cfg) {
  TermRecord r{std::move(raw), source, {}};
  r.tokens = preprocess(r.raw, cfg);
  return r;
}

enum class MatchCategory { incomplete_label, specific_vs_general, exact };

inline std::string_view to_string(MatchCategory c) {
  switch (c) {
    case MatchCategory::incomplete_label: return "incomplete_label";
    case MatchCategory::specific_vs_general: return "specific_vs_general";
    case MatchCategory::exact: return "exact";
  }
  return "?";
}

struct MatchResult {
  TermRecord ontology_term;
  TermRecord external_term;
  double similarity = 0;
  bool matched = false;
  std::optional<MatchCategory> category;
};

namespace detail {

inline bool strict_sub_multiset(std::vector<std::string> a, std::vector<std::string> b) {
  if (a.size() >= b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

inline MatchCategory categorize(const std::vector<std::string>& a, const std::vector<std::string>& b,
                                double similarity) {
  if (similarity >= 1.0 - 1e-12) return MatchCategory::exact;
  if (detail::strict_sub_multiset(a, b) || detail::strict_sub_multiset(b, a))
    return MatchCategory::incomplete_label;
  return MatchCategory::specific_vs_general;
}

/// Best ontology term per non-degenerate external term, in input order.
/// Degenerate records on either side are skipped.
inline std::vector<MatchResult> match_terms(const std::vector<TermRecord>& ontology_terms,
                                            const std::vector<TermRecord>& external_terms,
                                            double threshold = 0.7) {
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw ConfigError("threshold must lie in (0, 1], got " + std::to_string(threshold));
  std::vector<const TermRecord*> candidates;
  for (const auto& t : ontology_terms)
    if (!t.degenerate()) candidates.push_back(&t);
  if (candidates.empty()) throw ConfigError("no usable ontology terms to match against");

  std::vector<MatchResult> out;
  for (const auto& ext : external_terms) {
    if (ext.degenerate()) continue;
    const TermRecord* best = nullptr;
    double best_sim = -1;
    for (const auto* cand : candidates) {
      double sim = cosine(cand->tokens, ext.tokens);
      if (sim > best_sim || (sim == best_sim && cand->raw < best->raw)) {
        best = cand;
        best_sim = sim;
      }
    }
    MatchResult r{*best, ext, best_sim, best_sim >= threshold, std::nullopt};
    if (r.matched) r.category = categorize(best->tokens, ext.tokens, best_sim);
    out.push_back(std::move(r));
  }
  return out;
}

/// Re-preprocesses raw strings with `cfg` before matching.
inline std::vector<MatchResult> match_terms(const std::vector<std::string>& ontology_terms,
                                            const std::vector<std::string>& external_terms,
                                            double threshold, const PreprocessConfig& cfg) {
  std::vector<TermRecord> o, e;
  for (const auto& s : ontology_terms) o.push_back(make_term(s, TermSource::ontology, cfg));
  for (const auto& s : external_terms) e.push_back(make_term(s, TermSource::external, cfg));
  return match_terms(o, e, threshold);
}

struct MatchSummary {
  std::size_t external = 0;
  std::size_t matched = 0;
  std::size_t exact = 0;
  std::size_t incomplete_label = 0;
  std::size_t specific_vs_general = 0;
};

inline MatchSummary summarize(const std::vector<MatchResult>& results) {
  MatchSummary s;
  s.external = results.size();
  for (const auto& r : results) {
    if (!r.matched) continue;
    ++s.matched;
    switch (*r.category) {
      case MatchCategory::exact: ++s.exact; break;
      case MatchCategory::incomplete_label: ++s.incomplete_label; break;
      case MatchCategory::specific_vs_general: ++s.specific_vs_general; break;
    }
  }
  return s;
}

/// Tab-separated rows plus a trailing `# ...` summary line.
inline std::string format_report(const std::vector<MatchResult>& results) {
  std::string out;
  char buf[32];
  for (const auto& r : results) {
    std::snprintf(buf, sizeof buf, "%.4f", r.similarity);
    out += r.external_term.raw + '\t' + r.ontology_term.raw + '\t' + buf + '\t' + (r.matched ? "yes" : "no") +
           '\t' + (r.category ? std::string(to_string(*r.category)) : "-") + '\n';
  }
  auto s = summarize(results);
  out += "# external=" + std::to_string(s.external) + " matched=" + std::to_string(s.matched) +
         " exact=" + std::to_string(s.exact) + " incomplete_label=" + std::to_string(s.incomplete_label) +
         " specific_vs_general=" + std::to_string(s.specific_vs_general) + '\n';
  return out;
}

}  // namespace mathlod::replenish
