// mathlod: command-line front end.
//
// Exit codes: 0 ok, 1 semantic failure, 2 input parse error,
// 3 mapping/configuration error, 4 ambiguous phrase.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mathlod/mathlod.hpp"

namespace {

using namespace mathlod;

enum Exit { kOk = 0, kSemantic = 1, kParse = 2, kConfig = 3, kAmbiguous = 4 };

struct Options {
  std::string ontology;
  std::string mapping;
  std::string lexicon;
  std::string mode;
  std::size_t domain_size = 2;
  double threshold = 0.7;
  std::string output;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + opt.output);
  out << text;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw ConfigError(std::string(flag) + " is required");
}

/// Parse errors in an input file are reported with the file name.
template <typename F>
auto with_file(const std::string& path, F&& f) {
  try {
    return f(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.what());
  }
}

ontology::OntologyGraph load_ontology_file(const Options& opt) {
  require(opt.ontology, "--ontology");
  return with_file(opt.ontology, [](const std::string& s) { return ontology::load_ontology(s); });
}

translator::SymbolMapping load_mapping_file(const Options& opt) {
  require(opt.mapping, "--mapping");
  return with_file(opt.mapping, [](const std::string& s) { return translator::load_mapping(s); });
}

lexicon::Lexicon load_lexicon_file(const Options& opt) {
  require(opt.lexicon, "--lexicon");
  return with_file(opt.lexicon, [](const std::string& s) { return lexicon::load_llod(s); });
}

translator::TranslationMode resolve_mode(const Options& opt, const translator::SymbolMapping& m) {
  if (!opt.mode.empty()) return translator::parse_mode(opt.mode);
  return m.mode.value_or(translator::TranslationMode::generic);
}

int cmd_translate(const Options& opt, const std::string& sentence) {
  auto onto = load_ontology_file(opt);
  auto mapping = load_mapping_file(opt);
  auto sig = translator::signature_from_mapping(mapping, onto);
  auto s = fol::parse_sentence(sentence, sig);
  auto result = translator::translate(s, mapping, onto, resolve_mode(opt, mapping));
  emit(opt, rdf::serialize_turtle(result.graph));
  return kOk;
}

int cmd_check_condition(const Options& opt, const std::string& theory_path, const std::string& sentence) {
  require(opt.ontology, "--ontology");
  auto schema = with_file(opt.ontology, [](const std::string& s) { return rdf::parse_turtle(s); });
  auto onto = ontology::ontology_from_graph(schema);
  auto mapping = load_mapping_file(opt);
  auto base = translator::signature_from_mapping(mapping, onto);
  auto theory = with_file(theory_path, [&](const std::string& s) { return fol::parse_theory(s, base); });
  auto s = fol::parse_sentence(sentence, theory.signature);
  auto report = translator::check_semantic_condition(theory, s, mapping, onto, schema, opt.domain_size,
                                                     resolve_mode(opt, mapping));
  emit(opt, report.to_text());
  return report.passed ? kOk : kSemantic;
}

int cmd_parse_phrase(const Options& opt, const std::string& phrase, const std::string& entity_path) {
  auto onto = load_ontology_file(opt);
  auto lex = load_lexicon_file(opt);
  auto entities = with_file(entity_path, [](const std::string& s) { return lexicon::load_entity_map(s); });
  emit(opt, rdf::serialize_turtle(lexicon::parse_phrase(lex, onto, phrase, entities)));
  return kOk;
}

int cmd_verbalize(const Options& opt, const std::string& instance_path, const std::string& label_path) {
  auto onto = load_ontology_file(opt);
  auto lex = load_lexicon_file(opt);
  auto instance = with_file(instance_path, [](const std::string& s) { return rdf::parse_turtle(s); });
  auto labels = with_file(label_path, [](const std::string& s) { return lexicon::load_label_map(s); });
  emit(opt, lexicon::verbalize(lex, onto, instance, labels) + "\n");
  return kOk;
}

int cmd_match_terms(const Options& opt, const std::string& ontology_terms, const std::string& external_terms) {
  auto cfg = replenish::PreprocessConfig::defaults();
  if (const char* path = std::getenv("MATHLOD_STOPWORDS"); path && *path)
    cfg.set_stop_words(text::read_lines(read_file(path)));
  auto results = replenish::match_terms(text::read_lines(read_file(ontology_terms)),
                                        text::read_lines(read_file(external_terms)), opt.threshold, cfg);
  emit(opt, replenish::format_report(results));
  return kOk;
}

int cmd_validate(const Options& opt) {
  auto onto = load_ontology_file(opt);
  auto violations = ontology::validate(onto);
  std::string out;
  for (const auto& v : violations)
    out += std::string(to_string(v.severity)) + '\t' + v.to_string() + '\t' + v.detail + '\n';
  emit(opt, out);
  return ontology::has_errors(violations) ? kSemantic : kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"mathlod: FOL to reified-relationship RDF, lexicons and term matching"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", opt.output, "Write the result here instead of standard output");
  };
  auto add_ontology = [&](CLI::App* sub) {
    sub->add_option("--ontology", opt.ontology, "Ontology schema graph (Turtle)")->required();
  };

  std::string a1, a2;

  auto* translate = app.add_subcommand("translate", "Translate a ground atomic sentence to Turtle");
  translate->add_option("sentence", a1, "Sentence, e.g. Divides(m,n)")->required();
  add_ontology(translate);
  translate->add_option("--mapping", opt.mapping, "Symbol mapping (JSON)")->required();
  translate->add_option("--mode", opt.mode, "generic or role-properties");
  add_common(translate);

  auto* check = app.add_subcommand("check-condition", "Check the semantic condition by enumeration");
  check->add_option("theory", a1, "Theory file")->required();
  check->add_option("sentence", a2, "Sentence to add")->required();
  add_ontology(check);
  check->add_option("--mapping", opt.mapping, "Symbol mapping (JSON)")->required();
  check->add_option("--mode", opt.mode, "generic or role-properties");
  check->add_option("--domain-size", opt.domain_size, "FOL domain size");
  add_common(check);

  auto* parse = app.add_subcommand("parse-phrase", "Parse a controlled phrase into a relationship instance");
  parse->add_option("phrase", a1, "Phrase, e.g. \"m divides n\"")->required();
  parse->add_option("entities", a2, "Entity map (JSON token -> IRI)")->required();
  add_ontology(parse);
  parse->add_option("--lexicon", opt.lexicon, "LLOD lexicon (Turtle)")->required();
  add_common(parse);

  auto* verbalize = app.add_subcommand("verbalize", "Render a relationship instance as a phrase");
  verbalize->add_option("instance", a1, "Instance graph (Turtle)")->required();
  verbalize->add_option("labels", a2, "Label map (JSON IRI -> token)")->required();
  add_ontology(verbalize);
  verbalize->add_option("--lexicon", opt.lexicon, "LLOD lexicon (Turtle)")->required();
  add_common(verbalize);

  auto* match = app.add_subcommand("match-terms", "Match external terms against ontology terms");
  match->add_option("ontology-terms", a1, "Ontology term list")->required();
  match->add_option("external-terms", a2, "External term list")->required();
  match->add_option("--threshold", opt.threshold, "Similarity threshold in (0, 1]");
  add_common(match);

  auto* validate = app.add_subcommand("validate", "Validate an ontology");
  add_ontology(validate);
  add_common(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*translate) return cmd_translate(opt, a1);
    if (*check) return cmd_check_condition(opt, a1, a2);
    if (*parse) return cmd_parse_phrase(opt, a1, a2);
    if (*verbalize) return cmd_verbalize(opt, a1, a2);
    if (*match) return cmd_match_terms(opt, a1, a2);
    if (*validate) return cmd_validate(opt);
  } catch (const AmbiguityError& e) {
    std::cerr << "ambiguous: " << e.what() << "\n";
    return kAmbiguous;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const StructureError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kParse;
  } catch (const LexiconError& e) {
    std::cerr << "lexicon: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    std::cerr << "invalid ontology: " << e.what() << "\n";
    return kSemantic;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }
  return kConfig;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
