#pragma once

// Lexicons as lemon/ontolex Turtle.
//
// Per sense the writer emits one relationship variable `_:RelationshipN` and
// submaps `_:submapN`: one `synsem:isA` map for the relationship class, one
// `subjOfProp`/`objOfProp` map per bound slot and one `isA` map per typed
// slot. `synsem:ontoMapping` is never written; on load it is kept with the
// other unrecognized triples in Lexicon::preserved().

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "mathlod/error.hpp"
#include "mathlod/lexicon/lexicon.hpp"
#include "mathlod/rdf/term.hpp"
#include "mathlod/rdf/turtle.hpp"
#include "mathlod/rdf/vocab.hpp"

namespace mathlod::lexicon {

namespace detail {

inline Iri pos_iri(PartOfSpeech p) { return vocab::lexinfo(to_string(p)); }

inline Iri frame_class(FrameType f) {
  switch (f) {
    case FrameType::transitive: return vocab::lexinfo("TransitiveFrame");
    case FrameType::transitive_pp: return vocab::lexinfo("TransitivePPFrame");
    case FrameType::noun_pp: return vocab::lexinfo("NounPPFrame");
  }
  throw ContractError("bad frame type");
}

inline Iri slot_property(Slot s) {
  switch (s) {
    case Slot::subject: return vocab::lexinfo("subject");
    case Slot::direct_object: return vocab::lexinfo("directObject");
    case Slot::prepositional_object: return vocab::lexinfo("prepositionalObject");
  }
  throw ContractError("bad slot");
}

inline Iri slot_class(Slot s) {
  switch (s) {
    case Slot::subject: return vocab::lexinfo("Subject");
    case Slot::direct_object: return vocab::lexinfo("DirectObject");
    case Slot::prepositional_object: return vocab::lexinfo("PrepositionalObject");
  }
  throw ContractError("bad slot");
}

constexpr Slot kSlots[] = {Slot::subject, Slot::direct_object, Slot::prepositional_object};
constexpr PartOfSpeech kParts[] = {PartOfSpeech::verb, PartOfSpeech::noun, PartOfSpeech::adjective,
                                   PartOfSpeech::preposition};
constexpr FrameType kFrames[] = {FrameType::transitive, FrameType::transitive_pp, FrameType::noun_pp};

}  // namespace detail

inline rdf::RdfGraph lexicon_to_graph(const Lexicon& lex) {
  using rdf::BlankNode;
  using rdf::Literal;
  rdf::RdfGraph g;
  vocab::apply_prefixes(g, vocab::lexicon_prefixes(lex.lexicon_namespace().str()));
  const Iri type = vocab::type();
  std::size_t rel_counter = 0, map_counter = 0;

  auto emit_form = [&](const Form& f) {
    g.add(f.id, type, vocab::ontolex("Form"));
    g.add(f.id, vocab::ontolex("writtenRep"), Literal::lang(f.written_rep, f.language));
    for (const auto& [feature, value] : f.features)
      g.add(f.id, vocab::lexinfo(feature), vocab::lexinfo(value));
  };

  for (const auto& e : lex.entries()) {
    g.add(e.id, type, vocab::ontolex("LexicalEntry"));
    g.add(e.id, vocab::lexinfo("partOfSpeech"), detail::pos_iri(e.part_of_speech));
    g.add(e.id, vocab::ontolex("canonicalForm"), e.canonical_form.id);
    for (const auto& f : e.other_forms) g.add(e.id, vocab::ontolex("otherForm"), f.id);
    for (const auto& f : e.frames) g.add(e.id, vocab::synsem("synBehavior"), f.id);
    for (const auto& s : e.senses) g.add(e.id, vocab::ontolex("sense"), s.id);

    emit_form(e.canonical_form);
    for (const auto& f : e.other_forms) emit_form(f);

    for (const auto& f : e.frames) {
      g.add(f.id, type, detail::frame_class(f.type));
      for (Slot slot : detail::kSlots)
        if (const auto* a = f.find(slot)) g.add(f.id, detail::slot_property(slot), a->id);
      for (Slot slot : detail::kSlots) {
        const auto* a = f.find(slot);
        if (!a) continue;
        g.add(a->id, type, detail::slot_class(slot));
        if (slot == Slot::prepositional_object && f.preposition)
          g.add(a->id, vocab::synsem("marker"), Literal::lang(*f.preposition, lex.language()));
      }
    }

    for (const auto& s : e.senses) {
      const SyntacticFrame* frame = s.frame ? e.find_frame(*s.frame) : nullptr;
      g.add(s.id, type, vocab::ontolex("LexicalSense"));
      g.add(s.id, type, vocab::synsem("OntoMap"));
      g.add(s.id, vocab::ontolex("reference"), s.relationship_class);
      if (!frame) continue;
      BlankNode rel("Relationship" + std::to_string(++rel_counter));
      std::vector<std::pair<BlankNode, std::vector<std::pair<Iri, rdf::Term>>>> maps;
      maps.push_back({BlankNode("submap" + std::to_string(++map_counter)),
                      {{vocab::ontolex("reference"), s.relationship_class}, {vocab::synsem("isA"), rel}}});
      for (const auto& [slot, prop] : s.slot_bindings)
        maps.push_back({BlankNode("submap" + std::to_string(++map_counter)),
                        {{vocab::ontolex("reference"), prop},
                         {vocab::synsem("subjOfProp"), rel},
                         {vocab::synsem("objOfProp"), frame->find(slot)->id}}});
      for (const auto& [slot, role] : s.slot_role_types)
        maps.push_back({BlankNode("submap" + std::to_string(++map_counter)),
                        {{vocab::ontolex("reference"), role}, {vocab::synsem("isA"), frame->find(slot)->id}}});
      for (const auto& [node, facts] : maps) g.add(s.id, vocab::synsem("submap"), node);
      for (const auto& [node, facts] : maps) {
        g.add(node, type, vocab::synsem("OntoMap"));
        for (const auto& [p, o] : facts) g.add(node, p, o);
      }
    }
  }
  return g;
}

/// Turtle with the five lexicon prefixes; deterministic.
inline std::string serialize_llod(const Lexicon& lex) {
  return rdf::serialize_turtle(lexicon_to_graph(lex));
}

namespace detail {

class LexiconReader {
 public:
  LexiconReader(const rdf::RdfGraph& g, std::string default_language)
      : g_(g), default_language_(std::move(default_language)) {}

  Lexicon read() {
    std::vector<LexicalEntry> entries;
    for (const auto& t : g_.match(std::nullopt, vocab::type(), rdf::Term(vocab::ontolex("LexicalEntry")))) {
      consume(t);
      entries.push_back(entry(subject_iri(t)));
    }
    std::string language = default_language_;
    if (!entries.empty()) language = entries.front().canonical_form.language;

    Iri ns = vocab::iri(vocab::kLexicons, "");
    if (auto p = g_.prefix_namespace("")) {
      try {
        ns = Iri(*p);
      } catch (const ContractError&) {
      }
    }
    Lexicon lex(language, ns);
    for (auto& e : entries) lex.add_entry(std::move(e));
    for (const auto& t : g_.triples())
      if (!consumed_.count(t)) lex.add_preserved(t);
    return lex;
  }

 private:
  void consume(const rdf::Triple& t) { consumed_.insert(t); }

  static Iri subject_iri(const rdf::Triple& t) {
    if (auto* i = std::get_if<Iri>(&t.subject)) return *i;
    throw StructureError("lexical resources must be named by IRIs: " + rdf::to_string(t));
  }

  Iri iri_object(const rdf::Triple& t) {
    if (auto* i = std::get_if<Iri>(&t.object)) return *i;
    throw StructureError("expected an IRI object: " + rdf::to_string(t));
  }

  std::vector<rdf::Triple> all(const rdf::Term& s, const Iri& p) {
    auto out = g_.match(s, p, std::nullopt);
    for (const auto& t : out) consume(t);
    return out;
  }

  std::optional<rdf::Triple> at_most_one(const rdf::Term& s, const Iri& p, std::string_view what) {
    auto list = all(s, p);
    if (list.size() > 1) throw StructureError(rdf::to_string(s) + " has more than one " + std::string(what));
    if (list.empty()) return std::nullopt;
    return list.front();
  }

  rdf::Triple exactly_one(const rdf::Term& s, const Iri& p, std::string_view what) {
    auto t = at_most_one(s, p, what);
    if (!t) throw StructureError(rdf::to_string(s) + " has no " + std::string(what));
    return *t;
  }

  bool has_type(const rdf::Term& s, const Iri& cls) {
    rdf::Triple t(s, vocab::type(), cls);
    if (!g_.contains(t)) return false;
    consume(t);
    return true;
  }

  Form form(const Iri& id) {
    has_type(id, vocab::ontolex("Form"));
    auto rep = exactly_one(id, vocab::ontolex("writtenRep"), "written representation");
    auto* lit = std::get_if<rdf::Literal>(&rep.object);
    if (!lit) throw StructureError("written representation must be a literal on " + id.str());
    Form f{id, lit->lexical(), lit->language().value_or(default_language_), {}};
    const std::string lexinfo_ns(vocab::kLexinfo);
    for (const auto& t : g_.match(rdf::Term(id), std::nullopt, std::nullopt)) {
      const auto& p = t.predicate.str();
      auto* o = std::get_if<Iri>(&t.object);
      if (p.rfind(lexinfo_ns, 0) != 0 || !o || o->str().rfind(lexinfo_ns, 0) != 0) continue;
      f.features[p.substr(lexinfo_ns.size())] = o->str().substr(lexinfo_ns.size());
      consume(t);
    }
    return f;
  }

  SyntacticFrame frame(const Iri& id) {
    std::optional<FrameType> type;
    for (FrameType ft : kFrames) {
      if (!has_type(id, frame_class(ft))) continue;
      if (type) throw StructureError("frame " + id.str() + " has two frame types");
      type = ft;
    }
    if (!type) throw StructureError("frame " + id.str() + " has no known frame type");
    SyntacticFrame f{id, *type, {}, std::nullopt};
    for (Slot slot : kSlots) {
      auto t = at_most_one(id, slot_property(slot), to_string(slot));
      if (!t) continue;
      Iri arg = iri_object(*t);
      has_type(arg, slot_class(slot));
      f.arguments.push_back({arg, slot});
      if (slot == Slot::prepositional_object)
        if (auto marker = at_most_one(arg, vocab::synsem("marker"), "marker")) {
          auto* lit = std::get_if<rdf::Literal>(&marker->object);
          if (!lit) throw StructureError("marker must be a literal on " + arg.str());
          f.preposition = lit->lexical();
        }
    }
    check_frame(f);
    return f;
  }

  OntologyMapping sense(const Iri& id, const std::vector<SyntacticFrame>& frames) {
    has_type(id, vocab::ontolex("LexicalSense"));
    has_type(id, vocab::synsem("OntoMap"));
    OntologyMapping m{id, iri_object(exactly_one(id, vocab::ontolex("reference"), "reference")), {}, {}, std::nullopt};

    auto locate = [&](const Iri& arg) -> std::pair<const SyntacticFrame*, Slot> {
      for (const auto& f : frames)
        if (const auto* a = f.find(arg)) return {&f, a->slot};
      throw StructureError("sense " + id.str() + " refers to unknown syntactic argument " + arg.str());
    };
    auto use_frame = [&](const SyntacticFrame* f) {
      if (m.frame && *m.frame != f->id)
        throw StructureError("sense " + id.str() + " spans several frames");
      m.frame = f->id;
    };

    for (const auto& link : all(id, vocab::synsem("submap"))) {
      const rdf::Term& node = link.object;
      has_type(node, vocab::synsem("OntoMap"));
      Iri ref = iri_object(exactly_one(node, vocab::ontolex("reference"), "reference"));
      auto subj = at_most_one(node, vocab::synsem("subjOfProp"), "subjOfProp");
      auto obj = at_most_one(node, vocab::synsem("objOfProp"), "objOfProp");
      auto is_a = at_most_one(node, vocab::synsem("isA"), "isA");
      if (obj) {
        if (!subj) throw StructureError("property submap without subjOfProp in " + id.str());
        auto [f, slot] = locate(iri_object(*obj));
        use_frame(f);
        if (!m.slot_bindings.emplace(slot, ref).second)
          throw StructureError("sense " + id.str() + " binds slot " + std::string(to_string(slot)) + " twice");
      } else if (is_a) {
        if (rdf::is_blank(is_a->object)) {
          if (ref != m.relationship_class)
            throw StructureError("relationship submap of " + id.str() + " disagrees with the sense reference");
        } else {
          auto [f, slot] = locate(iri_object(*is_a));
          use_frame(f);
          if (!m.slot_role_types.emplace(slot, ref).second)
            throw StructureError("sense " + id.str() + " types slot " + std::string(to_string(slot)) + " twice");
        }
      } else {
        throw StructureError("submap of " + id.str() + " has neither isA nor objOfProp");
      }
    }
    if (!m.frame && frames.size() == 1 && !g_.match(rdf::Term(id), vocab::synsem("submap"), std::nullopt).empty())
      m.frame = frames.front().id;
    return m;
  }

  LexicalEntry entry(const Iri& id) {
    auto pos_t = exactly_one(id, vocab::lexinfo("partOfSpeech"), "part of speech");
    std::optional<PartOfSpeech> pos;
    for (PartOfSpeech p : kParts)
      if (pos_t.object == rdf::Term(pos_iri(p))) pos = p;
    if (!pos) throw StructureError("unsupported part of speech on " + id.str());

    Iri canonical = iri_object(exactly_one(id, vocab::ontolex("canonicalForm"), "canonical form"));
    LexicalEntry e{id, *pos, form(canonical), {}, {}, {}};
    for (const auto& t : all(id, vocab::ontolex("otherForm"))) e.other_forms.push_back(form(iri_object(t)));
    for (const auto& t : all(id, vocab::synsem("synBehavior"))) e.frames.push_back(frame(iri_object(t)));
    for (const auto& t : all(id, vocab::ontolex("sense"))) e.senses.push_back(sense(iri_object(t), e.frames));
    return e;
  }

  const rdf::RdfGraph& g_;
  std::string default_language_;
  std::set<rdf::Triple> consumed_;
};

}  // namespace detail

/// Lifts a lexicon graph. The language comes from the written
/// representations; `default_language` applies to empty lexicons.
inline Lexicon lexicon_from_graph(const rdf::RdfGraph& g, std::string default_language = "en") {
  return detail::LexiconReader(g, std::move(default_language)).read();
}

inline Lexicon load_llod(std::string_view turtle, std::string default_language = "en") {
  return lexicon_from_graph(rdf::parse_turtle(turtle), std::move(default_language));
}

}  // namespace mathlod::lexicon
