#pragma once

// Turtle subset reader/writer.
//
// Supported on input: @prefix, prefixed names, <absolute IRIs>, _:labels,
// [ ... ] anonymous nodes, the `a` keyword, `;` and `,` lists, single-line
// "strings" with @lang or ^^datatype, and # comments. Collections, long
// strings, numeric/boolean shorthand, @base and relative IRIs are rejected.
//
// Output is canonical: prefixes in map order, then one block per subject in
// order of first appearance, predicate/object pairs in insertion order.

#include <map>
#include <regex>
#include <set>
#include <string>
#include <string_view>

#include "mathlod/error.hpp"
#include "mathlod/rdf/term.hpp"
#include "mathlod/rdf/vocab.hpp"

namespace mathlod::rdf {

namespace detail {

inline bool is_local_char(char c) {
  return is_alpha(c) || is_digit(c) || c == '_' || c == '-' || c == '.';
}

/// Restricted PN_LOCAL: no escapes, ASCII only.
inline bool valid_local_name(std::string_view s) {
  if (s.empty()) return true;
  if (s.front() == '-' || s.front() == '.' || s.back() == '.') return false;
  return std::all_of(s.begin(), s.end(), is_local_char);
}

inline std::string escape_string(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

class TurtleWriter {
 public:
  explicit TurtleWriter(const RdfGraph::PrefixMap& prefixes) : prefixes_(prefixes) {
    for (const auto& [p, ns] : prefixes_)
      if (p == "rdf" && ns == vocab::kRdf) rdf_bound_ = true;
  }

  std::string iri(const Iri& value) const {
    const std::string& s = value.str();
    // Longest namespace first; fall back to shorter ones when the local part
    // is not a legal prefixed-name suffix.
    const std::pair<std::string, std::string>* best = nullptr;
    for (const auto& entry : prefixes_) {
      const auto& ns = entry.second;
      if (ns.size() > s.size() || s.compare(0, ns.size(), ns) != 0) continue;
      if (!detail::valid_local_name(std::string_view(s).substr(ns.size()))) continue;
      if (!best || ns.size() > best->second.size()) best = &entry;
    }
    if (best) return best->first + ":" + s.substr(best->second.size());
    if (s.find_first_of("<>\"{}|^`\\") != std::string::npos)
      throw SerializationError("IRI cannot be written in Turtle: " + s);
    return "<" + s + ">";
  }

  std::string predicate(const Iri& p) const {
    if (!rdf_bound_ && p.str() == std::string(vocab::kRdf) + "type") return "a";
    return iri(p);
  }

  std::string term(const Term& t) const {
    if (auto* i = std::get_if<Iri>(&t)) return iri(*i);
    if (auto* b = std::get_if<BlankNode>(&t)) return "_:" + b->label();
    const auto& lit = std::get<Literal>(t);
    std::string out = "\"" + detail::escape_string(lit.lexical()) + "\"";
    if (lit.language()) out += "@" + *lit.language();
    if (lit.datatype()) out += "^^" + iri(*lit.datatype());
    return out;
  }

 private:
  const RdfGraph::PrefixMap& prefixes_;
  bool rdf_bound_ = false;
};

inline std::string serialize_turtle(const RdfGraph& graph) {
  std::string out;
  for (const auto& [p, ns] : graph.prefixes()) {
    if (ns.find_first_of("<> \t\n") != std::string::npos)
      throw SerializationError("namespace cannot be written in Turtle: " + ns);
    out += "@prefix " + p + ": <" + ns + "> .\n";
  }
  if (graph.empty()) return out;
  if (!out.empty()) out += "\n";

  TurtleWriter writer(graph.prefixes());
  std::vector<Term> order;
  std::map<Term, std::vector<const Triple*>> groups;
  for (const auto& t : graph.triples()) {
    auto [it, inserted] = groups.try_emplace(t.subject);
    if (inserted) order.push_back(t.subject);
    it->second.push_back(&t);
  }
  bool first_group = true;
  for (const auto& subject : order) {
    if (!first_group) out += "\n";
    first_group = false;
    out += writer.term(subject);
    bool first = true;
    for (const Triple* t : groups.at(subject)) {
      out += first ? " " : " ;\n    ";
      first = false;
      out += writer.predicate(t->predicate) + " " + writer.term(t->object);
    }
    out += " .\n";
  }
  return out;
}

namespace detail {

class TurtleParser {
 public:
  explicit TurtleParser(std::string_view text) : text_(text) {
    static const std::regex label_re("_:([A-Za-z0-9_]+)");
    std::string copy(text);
    for (auto it = std::sregex_iterator(copy.begin(), copy.end(), label_re);
         it != std::sregex_iterator(); ++it)
      explicit_labels_.insert((*it)[1].str());
  }

  RdfGraph parse() {
    skip_ws();
    while (!at_end()) {
      if (peek() == '@') {
        directive();
      } else if (starts_with("PREFIX") || starts_with("BASE") ||
                 starts_with("prefix") || starts_with("base")) {
        fail("SPARQL-style directives are not supported");
      } else {
        triples();
        expect('.', "expected '.' at end of statement");
      }
      skip_ws();
    }
    return std::move(graph_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, column_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const {
    return text_.substr(pos_, s.size()) == s;
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end()) {
      char c = peek();
      if (is_space(c)) {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  void expect(char c, const std::string& msg) {
    skip_ws();
    if (at_end() || peek() != c) fail(msg);
    advance();
  }

  void directive() {
    if (starts_with("@prefix")) {
      for (int i = 0; i < 7; ++i) advance();
      skip_ws();
      std::string prefix;
      while (!at_end() && peek() != ':' && !is_space(peek())) {
        prefix += peek();
        advance();
      }
      if (peek() != ':') fail("expected ':' after prefix name");
      advance();
      if (!valid_prefix_name(prefix)) fail("invalid prefix name '" + prefix + "'");
      skip_ws();
      Iri ns = iriref();
      graph_.set_prefix(prefix, ns.str());
      expect('.', "expected '.' after @prefix directive");
      return;
    }
    if (starts_with("@base")) fail("@base is not supported");
    fail("unknown directive");
  }

  Iri iriref() {
    if (peek() != '<') fail("expected '<'");
    std::size_t line = line_, col = column_;
    advance();
    std::string value;
    while (!at_end() && peek() != '>') {
      if (is_space(peek())) throw ParseError("malformed IRI: whitespace", line, col);
      value += peek();
      advance();
    }
    if (at_end()) throw ParseError("unterminated IRI", line, col);
    advance();
    if (!valid_scheme_form(value))
      throw ParseError("malformed IRI <" + value + ">: relative IRIs are not supported",
                       line, col);
    return Iri(value);
  }

  Iri prefixed_name() {
    std::size_t line = line_, col = column_;
    std::string prefix;
    while (!at_end() && peek() != ':') {
      char c = peek();
      if (!(is_alpha(c) || is_digit(c) || c == '_' || c == '-' || c == '.'))
        throw ParseError("unexpected character '" + std::string(1, c) + "'", line, col);
      prefix += c;
      advance();
    }
    if (at_end()) throw ParseError("expected ':' in prefixed name", line, col);
    advance();
    std::string local;
    while (!at_end() && is_local_char(peek())) {
      local += peek();
      advance();
    }
    // A trailing '.' terminates the statement rather than the name.
    while (!local.empty() && local.back() == '.') {
      local.pop_back();
      --pos_;
      --column_;
    }
    auto ns = graph_.prefix_namespace(prefix);
    if (!ns) throw ParseError("undefined prefix '" + prefix + ":'", line, col);
    try {
      return Iri(*ns + local);
    } catch (const ContractError& e) {
      throw ParseError(e.what(), line, col);
    }
  }

  Iri iri() {
    if (peek() == '<') return iriref();
    return prefixed_name();
  }

  BlankNode fresh_blank() {
    for (;;) {
      std::string label = "b" + std::to_string(++anon_counter_);
      if (!explicit_labels_.count(label)) return BlankNode(label);
    }
  }

  BlankNode blank_label() {
    std::size_t line = line_, col = column_;
    advance();
    advance();
    std::string label;
    while (!at_end() && (is_alpha(peek()) || is_digit(peek()) || peek() == '_')) {
      label += peek();
      advance();
    }
    if (label.empty() || peek() == '-' || (peek() == '.' && is_local_char(peek(1))))
      throw ParseError("unsupported blank node label", line, col);
    return BlankNode(label);
  }

  /// Parses `[ ... ]` (cursor at '['), returning the fresh node.
  BlankNode anonymous() {
    advance();
    BlankNode node = fresh_blank();
    skip_ws();
    if (peek() == ']') {
      advance();
      return node;
    }
    predicate_object_list(node);
    expect(']', "expected ']'");
    return node;
  }

  Term subject() {
    skip_ws();
    char c = peek();
    if (c == '<') return iriref();
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '[') return anonymous();
    if (c == '(') fail("collections are not supported");
    if (c == '"' || c == '\'') fail("literal cannot be a subject");
    return prefixed_name();
  }

  Iri verb() {
    skip_ws();
    if (peek() == 'a' && (is_space(peek(1)) || peek(1) == '<' || peek(1) == '[' ||
                          peek(1) == '_' || peek(1) == '"')) {
      advance();
      return vocab::type();
    }
    if (peek() == '[' || (peek() == '_' && peek(1) == ':') || peek() == '"')
      fail("predicate must be an IRI");
    return iri();
  }

  Literal literal() {
    std::size_t line = line_, col = column_;
    if (peek() == '\'') fail("single-quoted strings are not supported");
    if (starts_with("\"\"\"")) fail("multiline strings are not supported");
    advance();
    std::string value;
    for (;;) {
      if (at_end() || peek() == '\n')
        throw ParseError("unterminated string literal", line, col);
      char c = peek();
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        advance();
        switch (peek()) {
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          case 'r': value += '\r'; break;
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          case '\'': value += '\''; break;
          default: fail("unsupported escape sequence");
        }
        advance();
        continue;
      }
      value += c;
      advance();
    }
    if (peek() == '@') {
      advance();
      std::string tag;
      while (!at_end() && (is_alpha(peek()) || is_digit(peek()) || peek() == '-')) {
        tag += peek();
        advance();
      }
      if (!valid_language_tag(tag)) throw ParseError("invalid language tag", line, col);
      return Literal::lang(value, tag);
    }
    if (starts_with("^^")) {
      advance();
      advance();
      return Literal::typed(value, iri());
    }
    return Literal(value);
  }

  Term object() {
    skip_ws();
    char c = peek();
    if (c == '<') return iriref();
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '[') return anonymous();
    if (c == '(') fail("collections are not supported");
    if (c == '"' || c == '\'') return literal();
    if (is_digit(c) || c == '+' || c == '-') fail("numeric literals are not supported");
    if (starts_with("true") || starts_with("false")) {
      char next = peek(starts_with("true") ? 4 : 5);
      if (next != ':' && !is_local_char(next)) fail("boolean literals are not supported");
    }
    if (at_end()) fail("unexpected end of input, expected object");
    return prefixed_name();
  }

  void object_list(const Term& s, const Iri& p) {
    for (;;) {
      // Anonymous objects: the linking triple precedes the node's own triples.
      skip_ws();
      if (peek() == '[') {
        advance();
        BlankNode node = fresh_blank();
        graph_.add(s, p, node);
        skip_ws();
        if (peek() != ']') {
          predicate_object_list(node);
          expect(']', "expected ']'");
        } else {
          advance();
        }
      } else {
        graph_.add(s, p, object());
      }
      skip_ws();
      if (peek() != ',') break;
      advance();
    }
  }

  void predicate_object_list(const Term& s) {
    for (;;) {
      Iri p = verb();
      object_list(s, p);
      skip_ws();
      if (peek() != ';') break;
      while (peek() == ';') {
        advance();
        skip_ws();
      }
      if (peek() == '.' || peek() == ']' || at_end()) break;
    }
  }

  void triples() {
    skip_ws();
    if (peek() == '[') {
      BlankNode node = anonymous();
      skip_ws();
      if (peek() != '.') predicate_object_list(node);
      return;
    }
    Term s = subject();
    predicate_object_list(s);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::size_t anon_counter_ = 0;
  std::set<std::string> explicit_labels_;
  RdfGraph graph_;
};

}  // namespace detail

/// Parses the supported Turtle subset. Anonymous nodes get labels `b1, b2, ...`
/// that avoid every label spelled out in the document.
inline RdfGraph parse_turtle(std::string_view text) {
  return detail::TurtleParser(text).parse();
}

}  // namespace mathlod::rdf
