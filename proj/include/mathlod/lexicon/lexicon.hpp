#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mathlod/error.hpp"
#include "mathlod/ontology/ontology.hpp"
#include "mathlod/rdf/term.hpp"
#include "mathlod/rdf/vocab.hpp"
#include "mathlod/text.hpp"

namespace mathlod::lexicon {

using ontology::ConceptId;
using rdf::Iri;

enum class PartOfSpeech { verb, noun, adjective, preposition };
enum class FrameType { transitive, transitive_pp, noun_pp };
enum class Slot { subject, direct_object, prepositional_object };

inline std::string_view to_string(PartOfSpeech p) {
  switch (p) {
    case PartOfSpeech::verb: return "verb";
    case PartOfSpeech::noun: return "noun";
    case PartOfSpeech::adjective: return "adjective";
    case PartOfSpeech::preposition: return "preposition";
  }
  return "?";
}

inline std::string_view to_string(Slot s) {
  switch (s) {
    case Slot::subject: return "subject";
    case Slot::direct_object: return "direct_object";
    case Slot::prepositional_object: return "prepositional_object";
  }
  return "?";
}

inline std::string_view to_string(FrameType f) {
  switch (f) {
    case FrameType::transitive: return "transitive";
    case FrameType::transitive_pp: return "transitive_pp";
    case FrameType::noun_pp: return "noun_pp";
  }
  return "?";
}

struct Form {
  Iri id;
  std::string written_rep;
  std::string language;
  /// Grammatical features as lexinfo local names, e.g. person -> thirdPerson.
  std::map<std::string, std::string> features;

  friend bool operator==(const Form&, const Form&) = default;
};

struct SyntacticArgument {
  Iri id;
  Slot slot;

  friend bool operator==(const SyntacticArgument&, const SyntacticArgument&) = default;
};

struct SyntacticFrame {
  Iri id;
  FrameType type = FrameType::transitive;
  /// Ordered by slot.
  std::vector<SyntacticArgument> arguments;
  std::optional<std::string> preposition;

  const SyntacticArgument* find(Slot s) const {
    for (const auto& a : arguments)
      if (a.slot == s) return &a;
    return nullptr;
  }
  const SyntacticArgument* find(const Iri& id) const {
    for (const auto& a : arguments)
      if (a.id == id) return &a;
    return nullptr;
  }

  friend bool operator==(const SyntacticFrame&, const SyntacticFrame&) = default;
};

/// A sense: the link from a frame's slots to a relationship class.
struct OntologyMapping {
  Iri id;
  ConceptId relationship_class;
  std::map<Slot, Iri> slot_bindings;
  std::map<Slot, ConceptId> slot_role_types;
  /// Frame whose arguments the bindings refer to.
  std::optional<Iri> frame;

  friend bool operator==(const OntologyMapping&, const OntologyMapping&) = default;
};

struct LexicalEntry {
  Iri id;
  PartOfSpeech part_of_speech = PartOfSpeech::verb;
  Form canonical_form;
  std::vector<Form> other_forms;
  std::vector<SyntacticFrame> frames;
  std::vector<OntologyMapping> senses;

  std::vector<const Form*> forms() const {
    std::vector<const Form*> out{&canonical_form};
    for (const auto& f : other_forms) out.push_back(&f);
    return out;
  }

  const SyntacticFrame* find_frame(const Iri& id) const {
    for (const auto& f : frames)
      if (f.id == id) return &f;
    return nullptr;
  }

  friend bool operator==(const LexicalEntry&, const LexicalEntry&) = default;
};

/// Throws StructureError when a frame misses the slots its type requires.
inline void check_frame(const SyntacticFrame& f) {
  std::vector<Slot> seen;
  std::vector<Iri> ids;
  for (const auto& a : f.arguments) {
    if (std::find(seen.begin(), seen.end(), a.slot) != seen.end())
      throw StructureError("frame " + f.id.str() + " has two " + std::string(to_string(a.slot)) + " arguments");
    if (std::find(ids.begin(), ids.end(), a.id) != ids.end())
      throw StructureError("frame " + f.id.str() + " reuses argument " + a.id.str());
    seen.push_back(a.slot);
    ids.push_back(a.id);
  }
  auto need = [&](Slot s) {
    if (!f.find(s))
      throw StructureError(std::string(to_string(f.type)) + " frame " + f.id.str() + " lacks a " +
                           std::string(to_string(s)));
  };
  switch (f.type) {
    case FrameType::transitive:
      need(Slot::subject);
      need(Slot::direct_object);
      break;
    case FrameType::transitive_pp:
      need(Slot::subject);
      need(Slot::direct_object);
      need(Slot::prepositional_object);
      break;
    case FrameType::noun_pp:
      need(Slot::prepositional_object);
      break;
  }
  if (f.type != FrameType::transitive && (!f.preposition || f.preposition->empty()))
    throw StructureError("frame " + f.id.str() + " needs a preposition");
}

inline void check_entry(const LexicalEntry& e) {
  for (const auto* form : e.forms())
    if (form->written_rep.empty()) throw StructureError("form " + form->id.str() + " has no written representation");
  for (const auto& f : e.frames) check_frame(f);
  for (const auto& s : e.senses) {
    if (!s.frame) {
      if (!s.slot_bindings.empty() || !s.slot_role_types.empty())
        throw StructureError("sense " + s.id.str() + " binds slots without a frame");
      continue;
    }
    const auto* frame = e.find_frame(*s.frame);
    if (!frame) throw StructureError("sense " + s.id.str() + " refers to an unknown frame");
    for (const auto& [slot, prop] : s.slot_bindings)
      if (!frame->find(slot))
        throw StructureError("sense " + s.id.str() + " binds slot " + std::string(to_string(slot)) +
                             " missing from its frame");
    for (const auto& [slot, role] : s.slot_role_types)
      if (!frame->find(slot))
        throw StructureError("sense " + s.id.str() + " types slot " + std::string(to_string(slot)) +
                             " missing from its frame");
  }
}

/// Single-language collection of entries, in insertion order.
class Lexicon {
 public:
  explicit Lexicon(std::string language = "en", Iri ns = vocab::iri(vocab::kLexicons, ""))
      : language_(std::move(language)), namespace_(std::move(ns)) {}

  const std::string& language() const noexcept { return language_; }
  const Iri& lexicon_namespace() const noexcept { return namespace_; }
  const std::vector<LexicalEntry>& entries() const noexcept { return entries_; }
  /// Triples kept from a loaded file that the model does not represent.
  const std::vector<rdf::Triple>& preserved() const noexcept { return preserved_; }

  /// Validates the entry; throws StructureError on duplicates, language
  /// mismatch or frame problems.
  void add_entry(LexicalEntry e) {
    if (find(e.id)) throw StructureError("duplicate lexical entry " + e.id.str());
    for (const auto* form : e.forms())
      if (form->language != language_)
        throw StructureError("form " + form->id.str() + " is in '" + form->language +
                             "' but the lexicon is '" + language_ + "'");
    check_entry(e);
    entries_.push_back(std::move(e));
  }

  void add_preserved(rdf::Triple t) { preserved_.push_back(std::move(t)); }

  const LexicalEntry* find(const Iri& id) const {
    for (const auto& e : entries_)
      if (e.id == id) return &e;
    return nullptr;
  }

  friend bool operator==(const Lexicon&, const Lexicon&) = default;

 private:
  std::string language_;
  Iri namespace_;
  std::vector<LexicalEntry> entries_;
  std::vector<rdf::Triple> preserved_;
};

struct FormMatch {
  const LexicalEntry* entry;
  const Form* form;
};

/// Case-insensitive match against every written representation.
inline std::vector<FormMatch> find_entry_by_form(const Lexicon& lex, std::string_view token) {
  std::vector<FormMatch> out;
  const std::string needle = text::lowercase(token);
  for (const auto& e : lex.entries())
    for (const auto* f : e.forms())
      if (text::lowercase(f->written_rep) == needle) out.push_back({&e, f});
  return out;
}

/// Referential integrity against an ontology: every sense names a
/// relationship class, bound properties are its arguments, and role types
/// are role concepts. Returns one message per problem.
inline std::vector<std::string> check_references(const Lexicon& lex, const ontology::OntologyGraph& onto) {
  std::vector<std::string> out;
  for (const auto& e : lex.entries()) {
    for (const auto& s : e.senses) {
      const auto* rel = onto.find_relationship(s.relationship_class);
      if (!rel) {
        if (!onto.find_concept(s.relationship_class))
          out.push_back(s.id.str() + ": unknown reference " + s.relationship_class.str());
        else if (!s.slot_bindings.empty())
          out.push_back(s.id.str() + ": binds slots but references a concept, not a relationship");
        continue;
      }
      for (const auto& [slot, prop] : s.slot_bindings)
        if (!rel->find_argument(prop))
          out.push_back(s.id.str() + ": " + prop.str() + " is not an argument of " + rel->id.str());
      for (const auto& [slot, role] : s.slot_role_types) {
        const auto* c = onto.find_concept(role);
        if (!c || c->meta != ontology::MetaType::role)
          out.push_back(s.id.str() + ": " + role.str() + " is not a role concept");
      }
    }
  }
  return out;
}

}  // namespace mathlod::lexicon
