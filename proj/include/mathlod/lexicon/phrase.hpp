#pragma once

// Controlled phrases <-> relationship instances.
//
//   <subject> <verb form> <object> [<preposition> <pp-object>]
//
// Arguments are single tokens or "quoted spans"; the verb may span several
// tokens (longest match wins per position).

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mathlod/error.hpp"
#include "mathlod/lexicon/lexicon.hpp"
#include "mathlod/ontology/ontology.hpp"
#include "mathlod/rdf/term.hpp"
#include "mathlod/rdf/vocab.hpp"
#include "mathlod/text.hpp"

namespace mathlod::lexicon {

using EntityMap = std::map<std::string, Iri>;
using LabelMap = std::map<Iri, std::string>;

/// JSON object token -> IRI.
inline EntityMap load_entity_map(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("entity map is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MappingError("entity map must be a JSON object");
  EntityMap out;
  for (const auto& [token, value] : doc.items()) {
    if (!value.is_string()) throw MappingError("entity map values must be IRI strings");
    try {
      out.emplace(token, Iri(value.get<std::string>()));
    } catch (const ContractError& e) {
      throw MappingError(e.what());
    }
  }
  return out;
}

/// JSON object IRI -> token.
inline LabelMap load_label_map(std::string_view json_text) {
  LabelMap out;
  nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("label map is not valid JSON");
  if (!doc.is_object()) throw MappingError("label map must be a JSON object");
  for (const auto& [iri, token] : doc.items()) {
    if (!token.is_string()) throw MappingError("label map values must be strings");
    try {
      out.emplace(Iri(iri), token.get<std::string>());
    } catch (const ContractError& e) {
      throw MappingError(e.what());
    }
  }
  return out;
}

namespace detail {

struct PhraseMatch {
  const LexicalEntry* entry;
  const SyntacticFrame* frame;
  const OntologyMapping* sense;
  std::map<Slot, std::string> fillers;
};

inline rdf::RdfGraph::PrefixMap instance_prefixes(const std::vector<Iri>& objects) {
  auto prefixes = vocab::template_prefixes();
  std::set<std::string> bound;
  for (const auto& [p, ns] : prefixes) bound.insert(ns);
  std::size_t counter = 0;
  for (const auto& o : objects) {
    auto ns = o.namespace_part();
    if (!bound.insert(ns).second) continue;
    prefixes.emplace_back(counter == 0 ? std::string() : "ns" + std::to_string(counter), ns);
    ++counter;
  }
  return prefixes;
}

}  // namespace detail

/// Builds the relationship instance for a phrase. Errors: LexiconError when
/// no entry or frame matches, AmbiguityError when several senses match,
/// MappingError when an argument token has no entity.
inline rdf::RdfGraph parse_phrase(const Lexicon& lex, const ontology::OntologyGraph& onto,
                                  std::string_view phrase, const EntityMap& entity_map) {
  const auto tokens = text::tokenize_phrase(phrase);
  if (tokens.size() < 3) throw LexiconError("phrase needs a subject, a verb and an object");

  std::vector<detail::PhraseMatch> matches;
  bool verb_found = false;
  for (std::size_t start = 1; start + 1 < tokens.size(); ++start) {
    for (std::size_t len = tokens.size() - start - 1; len >= 1; --len) {
      std::string span = tokens[start];
      for (std::size_t k = 1; k < len; ++k) span += " " + tokens[start + k];
      std::vector<FormMatch> found;
      for (const auto& m : find_entry_by_form(lex, span))
        if (m.entry->part_of_speech == PartOfSpeech::verb) found.push_back(m);
      if (found.empty()) continue;
      verb_found = true;
      const std::size_t rest = start + len;
      const std::size_t remaining = tokens.size() - rest;
      std::set<const LexicalEntry*> entries;
      for (const auto& m : found) entries.insert(m.entry);
      for (const auto* entry : entries) {
        if (start != 1) continue;  // subject is one token
        for (const auto& frame : entry->frames) {
          std::map<Slot, std::string> fillers;
          if (frame.type == FrameType::transitive && remaining == 1) {
            fillers = {{Slot::subject, tokens[0]}, {Slot::direct_object, tokens[rest]}};
          } else if (frame.type == FrameType::transitive_pp && remaining == 3 && frame.preposition &&
                     text::iequals(tokens[rest + 1], *frame.preposition)) {
            fillers = {{Slot::subject, tokens[0]},
                       {Slot::direct_object, tokens[rest]},
                       {Slot::prepositional_object, tokens[rest + 2]}};
          } else {
            continue;
          }
          for (const auto& sense : entry->senses)
            if (sense.frame && *sense.frame == frame.id)
              matches.push_back({entry, &frame, &sense, fillers});
        }
      }
      break;  // longest match at this position
    }
  }
  if (!verb_found) throw LexiconError("no verb entry matches the phrase '" + std::string(phrase) + "'");
  if (matches.empty()) throw LexiconError("no syntactic frame matches the phrase '" + std::string(phrase) + "'");
  if (matches.size() > 1) {
    std::vector<std::string> ids;
    for (const auto& m : matches) ids.push_back(m.sense->id.str());
    std::string msg = "ambiguous phrase, candidate senses:";
    for (const auto& id : ids) msg += " " + id;
    throw AmbiguityError(msg, std::move(ids));
  }

  const auto& m = matches.front();
  const auto* rel = onto.find_relationship(m.sense->relationship_class);
  if (!rel) throw MappingError("sense " + m.sense->id.str() + " references unknown relationship " +
                               m.sense->relationship_class.str());

  std::vector<std::pair<Iri, Iri>> facts;
  for (Slot slot : {Slot::subject, Slot::direct_object, Slot::prepositional_object}) {
    auto b = m.sense->slot_bindings.find(slot);
    if (b == m.sense->slot_bindings.end()) continue;
    if (!rel->find_argument(b->second))
      throw MappingError(b->second.str() + " is not an argument of " + rel->id.str());
    const std::string& token = m.fillers.at(slot);
    auto e = entity_map.find(token);
    if (e == entity_map.end()) throw MappingError("no entity for token '" + token + "'");
    facts.emplace_back(b->second, e->second);
  }

  std::vector<Iri> objects;
  for (const auto& [p, o] : facts) objects.push_back(o);
  rdf::RdfGraph g;
  vocab::apply_prefixes(g, detail::instance_prefixes(objects));
  rdf::BlankNode node("rel");
  g.add(node, vocab::type(), rel->id);
  for (const auto& [p, o] : facts) g.add(node, p, o);
  return g;
}

/// Renders the single lexicalized relationship node of `instance`. The first
/// sense (entry order) for its class wins; a third-person form is preferred
/// over the canonical form. IRIs missing from `labels` use their local name.
inline std::string verbalize(const Lexicon& lex, const ontology::OntologyGraph& onto,
                             const rdf::RdfGraph& instance, const LabelMap& labels) {
  (void)onto;
  auto sense_for = [&](const Iri& cls) -> std::pair<const LexicalEntry*, const OntologyMapping*> {
    for (const auto& e : lex.entries())
      for (const auto& s : e.senses)
        if (s.relationship_class == cls && s.frame) return {&e, &s};
    return {nullptr, nullptr};
  };

  std::vector<std::pair<rdf::Term, Iri>> nodes;
  for (const auto& t : instance.match(std::nullopt, vocab::type(), std::nullopt)) {
    auto* cls = std::get_if<Iri>(&t.object);
    if (cls && sense_for(*cls).first) nodes.emplace_back(t.subject, *cls);
  }
  if (nodes.empty()) throw LexiconError("no relationship node with a lexicalization");
  if (nodes.size() > 1) throw LexiconError("instance has more than one lexicalized relationship node");

  const auto& [node, cls] = nodes.front();
  auto [entry, sense] = sense_for(cls);
  const auto* frame = entry->find_frame(*sense->frame);

  auto filler = [&](Slot slot) {
    auto b = sense->slot_bindings.find(slot);
    if (b == sense->slot_bindings.end())
      throw LexiconError("unbound slot " + std::string(to_string(slot)) + " in sense " + sense->id.str());
    auto objs = instance.objects(node, b->second);
    if (objs.empty())
      throw LexiconError("instance has no value for " + b->second.str() + " (" + std::string(to_string(slot)) + ")");
    auto* iri = std::get_if<Iri>(&objs.front());
    if (!iri) throw LexiconError("slot " + std::string(to_string(slot)) + " must be filled by an IRI");
    auto l = labels.find(*iri);
    return l != labels.end() ? l->second : std::string(iri->local_name());
  };

  const Form* verb = &entry->canonical_form;
  for (const auto& f : entry->other_forms) {
    auto person = f.features.find("person");
    if (person != f.features.end() && person->second == "thirdPerson") {
      verb = &f;
      break;
    }
  }

  // The verb is written as-is; arguments are quoted when they contain spaces.
  std::vector<std::string> parts;
  if (frame->find(Slot::subject)) parts.push_back(text::join_phrase({filler(Slot::subject)}));
  parts.push_back(verb->written_rep);
  if (frame->find(Slot::direct_object)) parts.push_back(text::join_phrase({filler(Slot::direct_object)}));
  if (frame->find(Slot::prepositional_object)) {
    parts.push_back(frame->preposition.value_or(""));
    parts.push_back(text::join_phrase({filler(Slot::prepositional_object)}));
  }
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

}  // namespace mathlod::lexicon
