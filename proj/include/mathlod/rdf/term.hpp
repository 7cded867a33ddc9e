#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mathlod/error.hpp"

namespace mathlod::rdf {

namespace detail {

inline bool is_alpha(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline bool valid_scheme_form(std::string_view s) {
  auto colon = s.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!is_alpha(s[0])) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    char c = s[i];
    if (!is_alpha(c) && !is_digit(c) && c != '+' && c != '-' && c != '.')
      return false;
  }
  return true;
}

}  // namespace detail

/// Absolute IRI. Must contain `<scheme>:` and no whitespace.
class Iri {
 public:
  explicit Iri(std::string value) : value_(std::move(value)) {
    if (value_.empty()) throw ContractError("IRI must not be empty");
    if (std::any_of(value_.begin(), value_.end(), detail::is_space))
      throw ContractError("IRI contains whitespace: " + value_);
    if (!detail::valid_scheme_form(value_))
      throw ContractError("IRI is not absolute: " + value_);
  }

  const std::string& str() const noexcept { return value_; }

  /// Text after the last '#' or '/', or the whole IRI.
  std::string_view local_name() const noexcept {
    auto pos = value_.find_last_of("#/");
    if (pos == std::string::npos || pos + 1 == value_.size()) return value_;
    return std::string_view(value_).substr(pos + 1);
  }

  /// Everything up to and including the last '#' or '/'.
  std::string namespace_part() const {
    auto pos = value_.find_last_of("#/");
    if (pos == std::string::npos) return value_;
    return value_.substr(0, pos + 1);
  }

  auto operator<=>(const Iri&) const = default;

 private:
  std::string value_;
};

inline bool valid_blank_label(std::string_view label) {
  if (label.empty()) return false;
  return std::all_of(label.begin(), label.end(), [](char c) {
    return detail::is_alpha(c) || detail::is_digit(c) || c == '_';
  });
}

class BlankNode {
 public:
  explicit BlankNode(std::string label) : label_(std::move(label)) {
    if (!valid_blank_label(label_))
      throw ContractError("invalid blank node label: '" + label_ + "'");
  }

  const std::string& label() const noexcept { return label_; }

  auto operator<=>(const BlankNode&) const = default;

 private:
  std::string label_;
};

inline bool valid_language_tag(std::string_view tag) {
  if (tag.empty()) return false;
  bool first = true;
  std::size_t run = 0;
  for (char c : tag) {
    if (c == '-') {
      if (run == 0) return false;
      run = 0;
      first = false;
      continue;
    }
    if (first ? !detail::is_alpha(c) : !(detail::is_alpha(c) || detail::is_digit(c)))
      return false;
    ++run;
  }
  return run > 0;
}

class Literal {
 public:
  explicit Literal(std::string lexical,
                   std::optional<std::string> language = std::nullopt,
                   std::optional<Iri> datatype = std::nullopt)
      : lexical_(std::move(lexical)),
        language_(std::move(language)),
        datatype_(std::move(datatype)) {
    if (language_ && datatype_)
      throw ContractError("literal cannot carry both a language tag and a datatype");
    if (language_ && !valid_language_tag(*language_))
      throw ContractError("invalid language tag: '" + *language_ + "'");
  }

  static Literal lang(std::string lexical, std::string tag) {
    return Literal(std::move(lexical), std::move(tag));
  }
  static Literal typed(std::string lexical, Iri datatype) {
    return Literal(std::move(lexical), std::nullopt, std::move(datatype));
  }

  const std::string& lexical() const noexcept { return lexical_; }
  const std::optional<std::string>& language() const noexcept { return language_; }
  const std::optional<Iri>& datatype() const noexcept { return datatype_; }

  auto operator<=>(const Literal&) const = default;

 private:
  std::string lexical_;
  std::optional<std::string> language_;
  std::optional<Iri> datatype_;
};

using Term = std::variant<Iri, BlankNode, Literal>;

inline bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline bool is_blank(const Term& t) { return std::holds_alternative<BlankNode>(t); }
inline bool is_literal(const Term& t) { return std::holds_alternative<Literal>(t); }

/// N-Triples-like rendering, used in diagnostics.
inline std::string to_string(const Term& t) {
  if (auto* iri = std::get_if<Iri>(&t)) return "<" + iri->str() + ">";
  if (auto* b = std::get_if<BlankNode>(&t)) return "_:" + b->label();
  const auto& lit = std::get<Literal>(t);
  std::string out = "\"" + lit.lexical() + "\"";
  if (lit.language()) out += "@" + *lit.language();
  if (lit.datatype()) out += "^^<" + lit.datatype()->str() + ">";
  return out;
}

struct Triple {
  Term subject;
  Iri predicate;
  Term object;

  Triple(Term s, Iri p, Term o)
      : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
    if (is_literal(subject))
      throw ContractError("triple subject cannot be a literal");
  }

  auto operator<=>(const Triple&) const = default;
};

inline std::string to_string(const Triple& t) {
  return to_string(t.subject) + " <" + t.predicate.str() + "> " +
         to_string(t.object) + " .";
}

/// Turtle PN_PREFIX (empty prefix allowed).
inline bool valid_prefix_name(std::string_view p) {
  if (p.empty()) return true;
  if (!detail::is_alpha(p.front())) return false;
  if (p.back() == '.') return false;
  return std::all_of(p.begin(), p.end(), [](char c) {
    return detail::is_alpha(c) || detail::is_digit(c) || c == '_' || c == '-' ||
           c == '.';
  });
}

/// A set of triples that remembers insertion order, plus an ordered prefix map.
class RdfGraph {
 public:
  using PrefixMap = std::vector<std::pair<std::string, std::string>>;

  RdfGraph() = default;

  /// Returns false when the triple was already present.
  bool add(Triple t) {
    if (!index_.insert(t).second) return false;
    triples_.push_back(std::move(t));
    return true;
  }
  bool add(Term s, Iri p, Term o) {
    return add(Triple(std::move(s), std::move(p), std::move(o)));
  }

  bool remove(const Triple& t) {
    if (index_.erase(t) == 0) return false;
    triples_.erase(std::find(triples_.begin(), triples_.end(), t));
    return true;
  }

  bool contains(const Triple& t) const { return index_.count(t) != 0; }

  const std::vector<Triple>& triples() const noexcept { return triples_; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }

  /// Adds or rebinds a prefix, keeping the original position on rebind.
  void set_prefix(std::string prefix, std::string ns) {
    if (!valid_prefix_name(prefix))
      throw ContractError("invalid prefix name: '" + prefix + "'");
    for (auto& [p, n] : prefixes_) {
      if (p == prefix) {
        n = std::move(ns);
        return;
      }
    }
    prefixes_.emplace_back(std::move(prefix), std::move(ns));
  }

  const PrefixMap& prefixes() const noexcept { return prefixes_; }

  std::optional<std::string> prefix_namespace(std::string_view prefix) const {
    for (const auto& [p, n] : prefixes_)
      if (p == prefix) return n;
    return std::nullopt;
  }

  /// Blank nodes in order of first appearance.
  std::vector<BlankNode> blank_nodes() const {
    std::vector<BlankNode> out;
    std::set<BlankNode> seen;
    auto visit = [&](const Term& t) {
      if (auto* b = std::get_if<BlankNode>(&t))
        if (seen.insert(*b).second) out.push_back(*b);
    };
    for (const auto& t : triples_) {
      visit(t.subject);
      visit(t.object);
    }
    return out;
  }

  /// IRIs in any position, in order of first appearance.
  std::vector<Iri> iris() const {
    std::vector<Iri> out;
    std::set<Iri> seen;
    auto visit = [&](const Iri& i) {
      if (seen.insert(i).second) out.push_back(i);
    };
    for (const auto& t : triples_) {
      if (auto* s = std::get_if<Iri>(&t.subject)) visit(*s);
      visit(t.predicate);
      if (auto* o = std::get_if<Iri>(&t.object)) visit(*o);
    }
    return out;
  }

  /// Triples whose components equal the given ones; nullopt is a wildcard.
  std::vector<Triple> match(const std::optional<Term>& s,
                            const std::optional<Iri>& p,
                            const std::optional<Term>& o) const {
    std::vector<Triple> out;
    for (const auto& t : triples_) {
      if (s && t.subject != *s) continue;
      if (p && t.predicate != *p) continue;
      if (o && t.object != *o) continue;
      out.push_back(t);
    }
    return out;
  }

  /// Objects of (s, p, ?) in insertion order.
  std::vector<Term> objects(const Term& s, const Iri& p) const {
    std::vector<Term> out;
    for (const auto& t : triples_)
      if (t.subject == s && t.predicate == p) out.push_back(t.object);
    return out;
  }

  /// Subjects of (?, p, o) in insertion order.
  std::vector<Term> subjects(const Iri& p, const Term& o) const {
    std::vector<Term> out;
    for (const auto& t : triples_)
      if (t.predicate == p && t.object == o) out.push_back(t.subject);
    return out;
  }

  bool subset_of(const RdfGraph& other) const {
    return std::all_of(triples_.begin(), triples_.end(),
                       [&](const Triple& t) { return other.contains(t); });
  }

 private:
  std::vector<Triple> triples_;
  std::set<Triple> index_;
  PrefixMap prefixes_;
};

}  // namespace mathlod::rdf
