#pragma once

// Ground atomic sentences over a declared signature, and the plain-text
// theory format:
//
//   # comment
//   pred Divides/2
//   const m n
//   Divides(m, n)

#include <cctype>
#include <charconv>
#include <compare>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mathlod/error.hpp"

namespace mathlod::fol {

inline bool valid_symbol(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  if (!alpha(name.front())) return false;
  for (char c : name)
    if (!alpha(c) && !(c >= '0' && c <= '9') && c != '_') return false;
  return true;
}

struct Signature {
  std::map<std::string, int> predicates;
  std::set<std::string> constants;

  Signature& add_predicate(const std::string& name, int arity) {
    if (!valid_symbol(name)) throw ContractError("invalid predicate name '" + name + "'");
    if (arity < 1) throw ContractError("predicate " + name + " needs arity >= 1");
    auto [it, inserted] = predicates.emplace(name, arity);
    if (!inserted && it->second != arity)
      throw ContractError("predicate " + name + " redeclared with a different arity");
    return *this;
  }

  Signature& add_constant(const std::string& name) {
    if (!valid_symbol(name)) throw ContractError("invalid constant name '" + name + "'");
    constants.insert(name);
    return *this;
  }

  /// Union; arities must agree.
  void merge(const Signature& other) {
    for (const auto& [p, a] : other.predicates) add_predicate(p, a);
    for (const auto& c : other.constants) add_constant(c);
  }

  friend bool operator==(const Signature&, const Signature&) = default;
};

struct AtomicSentence {
  std::string predicate;
  std::vector<std::string> args;

  auto operator<=>(const AtomicSentence&) const = default;
};

inline std::string format_sentence(const AtomicSentence& s) {
  std::string out = s.predicate + "(";
  for (std::size_t i = 0; i < s.args.size(); ++i) out += (i ? ", " : "") + s.args[i];
  return out + ")";
}

/// Throws ParseError naming the first problem.
inline void check_well_formed(const AtomicSentence& s, const Signature& sig) {
  auto it = sig.predicates.find(s.predicate);
  if (it == sig.predicates.end()) throw ParseError("unknown predicate '" + s.predicate + "'");
  if (static_cast<int>(s.args.size()) != it->second)
    throw ParseError("arity mismatch: " + s.predicate + " expects " +
                     std::to_string(it->second) + " argument(s), got " +
                     std::to_string(s.args.size()));
  for (const auto& a : s.args)
    if (!sig.constants.count(a)) throw ParseError("unknown constant '" + a + "'");
}

/// Parses `Name(arg1, arg2, ...)`. Positions in errors are 1-based columns.
inline AtomicSentence parse_sentence(std::string_view text, const Signature& sig) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
  };
  auto fail = [&](const std::string& msg) -> ParseError { return ParseError(msg, 0, i + 1); };
  auto symbol = [&]() {
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
      ++i;
    std::string name(text.substr(start, i - start));
    if (!valid_symbol(name)) {
      i = start;
      throw fail("expected a symbol");
    }
    return name;
  };

  AtomicSentence s;
  skip();
  s.predicate = symbol();
  skip();
  if (i >= text.size() || text[i] != '(') throw fail("expected '('");
  ++i;
  for (;;) {
    skip();
    s.args.push_back(symbol());
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ')') {
      ++i;
      break;
    }
    throw fail("expected ',' or ')'");
  }
  skip();
  if (i != text.size()) throw fail("unexpected trailing input");
  check_well_formed(s, sig);
  return s;
}

/// A finite set of ground atoms over a signature.
struct Theory {
  Signature signature;
  std::set<AtomicSentence> axioms;

  void add_axiom(AtomicSentence s) {
    check_well_formed(s, signature);
    axioms.insert(std::move(s));
  }
};

/// Parses the theory text format. `base` contributes extra declarations
/// (e.g. derived from a symbol mapping). Errors carry the line number.
inline Theory parse_theory(std::string_view text, const Signature& base = {}) {
  Theory theory;
  theory.signature = base;
  std::vector<std::pair<std::size_t, std::string>> sentences;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string head;
    if (!(words >> head)) continue;
    try {
      if (head == "pred") {
        std::string decl;
        bool any = false;
        while (words >> decl) {
          auto slash = decl.find('/');
          int arity = 0;
          if (slash == std::string::npos ||
              std::from_chars(decl.data() + slash + 1, decl.data() + decl.size(), arity).ec !=
                  std::errc{})
            throw ParseError("expected Name/arity in pred declaration", lineno, 1);
          theory.signature.add_predicate(decl.substr(0, slash), arity);
          any = true;
        }
        if (!any) throw ParseError("empty pred declaration", lineno, 1);
      } else if (head == "const") {
        std::string name;
        while (words >> name) theory.signature.add_constant(name);
      } else {
        sentences.emplace_back(lineno, line);
      }
    } catch (const ContractError& e) {
      throw ParseError(e.what(), lineno, 1);
    }
  }
  for (const auto& [n, body] : sentences) {
    try {
      theory.axioms.insert(parse_sentence(body, theory.signature));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), n, e.column() ? e.column() : 1);
    }
  }
  return theory;
}

}  // namespace mathlod::fol
