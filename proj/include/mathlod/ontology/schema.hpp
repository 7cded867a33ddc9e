#pragma once

// Projection of an OntologyGraph onto its RDF schema graph, and the inverse
// lift used to load ontology files.
//
// Concepts carry an omp:metaOntologicalType triple; relationship classes do
// not. Argument properties are declared as subproperties of omp:hasArgument
// with domain = relationship class, range = role concept and an integer
// omp:argumentPosition.

#include <charconv>
#include <map>
#include <string>

#include "mathlod/ontology/ontology.hpp"
#include "mathlod/rdf/term.hpp"
#include "mathlod/rdf/turtle.hpp"
#include "mathlod/rdf/vocab.hpp"

namespace mathlod::ontology {

namespace detail {

inline void emit_labels(rdf::RdfGraph& g, const Iri& id, const LabelMap& labels) {
  for (const auto& [lang, list] : labels)
    for (const auto& text : list)
      g.add(id, vocab::label(),
            lang.empty() ? rdf::Literal(text) : rdf::Literal::lang(text, lang));
}

}  // namespace detail

/// Throws ValidationError when validate() reports error-severity violations.
inline rdf::RdfGraph to_schema_graph(const OntologyGraph& onto) {
  auto violations = validate(onto);
  if (has_errors(violations)) {
    std::string msg = "ontology is invalid:";
    for (const auto& v : violations)
      if (v.severity == Severity::error) msg += " " + v.to_string();
    throw ValidationError(msg);
  }

  rdf::RdfGraph g;
  vocab::apply_prefixes(g, vocab::template_prefixes());
  for (const auto& [p, ns] : onto.extra_prefixes()) g.set_prefix(p, ns);

  const Iri owl_class = vocab::owl("Class");
  for (const auto& c : onto.concepts()) {
    g.add(c.id, vocab::type(), owl_class);
    for (const auto& p : c.parents) g.add(c.id, vocab::sub_class_of(), p);
    g.add(c.id, vocab::meta_type(), vocab::omp(to_string(c.meta)));
    detail::emit_labels(g, c.id, c.labels);
    if (c.definition) g.add(c.id, vocab::comment(), rdf::Literal(*c.definition));
  }
  for (const auto& r : onto.relationships()) {
    g.add(r.id, vocab::type(), owl_class);
    for (const auto& p : r.parents) g.add(r.id, vocab::sub_class_of(), p);
    detail::emit_labels(g, r.id, r.labels);
    for (const auto& a : r.ordered_arguments()) {
      g.add(a.property, vocab::sub_property_of(), vocab::has_argument());
      g.add(a.property, vocab::domain(), r.id);
      g.add(a.property, vocab::range(), a.role_concept);
      g.add(a.property, vocab::argument_position(),
            rdf::Literal::typed(std::to_string(a.position), vocab::xsd("integer")));
      if (!a.label.empty()) g.add(a.property, vocab::label(), rdf::Literal(a.label));
    }
  }
  for (const auto& t : onto.extras()) g.add(t);
  return g;
}

/// Inverse of to_schema_graph. Triples outside the recognized vocabulary are
/// kept as extras. Throws StructureError on contradictory declarations.
inline OntologyGraph ontology_from_graph(const rdf::RdfGraph& graph,
                                         Iri base_namespace = vocab::omp("")) {
  using rdf::Term;
  const Iri type = vocab::type(), owl_class = vocab::owl("Class"), meta = vocab::meta_type();
  const Iri sc = vocab::sub_class_of(), sp = vocab::sub_property_of(), dom = vocab::domain(),
            rng = vocab::range(), lbl = vocab::label(), cmt = vocab::comment(),
            pos = vocab::argument_position(), has_arg = vocab::has_argument();
  const Iri kind = vocab::omp("Kind"), role = vocab::omp("Role");

  auto subject_iri = [](const rdf::Triple& t) -> std::optional<Iri> {
    if (auto* i = std::get_if<Iri>(&t.subject)) return *i;
    return std::nullopt;
  };

  // Pass 1: classify subjects.
  std::vector<Iri> order;
  std::set<Iri> seen_subject;
  std::map<Iri, MetaType> metas;
  std::set<Iri> classes;
  for (const auto& t : graph.triples()) {
    auto s = subject_iri(t);
    if (!s) continue;
    if (seen_subject.insert(*s).second) order.push_back(*s);
    if (t.predicate == meta) {
      auto* o = std::get_if<Iri>(&t.object);
      if (!o || (*o != kind && *o != role))
        throw StructureError("unknown meta-ontological type on " + s->str());
      MetaType m = *o == kind ? MetaType::kind : MetaType::role;
      auto [it, inserted] = metas.emplace(*s, m);
      if (!inserted && it->second != m)
        throw StructureError("conflicting meta-ontological types on " + s->str());
    }
    if (t.predicate == type && t.object == Term(owl_class)) classes.insert(*s);
  }
  std::set<Iri> relationship_ids;
  for (const auto& c : classes)
    if (!metas.count(c)) relationship_ids.insert(c);

  std::set<Iri> argument_props;
  for (const auto& t : graph.triples()) {
    auto s = subject_iri(t);
    auto* o = std::get_if<Iri>(&t.object);
    if (s && o && t.predicate == dom && relationship_ids.count(*o)) argument_props.insert(*s);
  }

  std::set<rdf::Triple> consumed;
  auto consume = [&](const rdf::Triple& t) { consumed.insert(t); };

  auto read_labels = [&](const Iri& id) {
    LabelMap labels;
    for (const auto& t : graph.match(Term(id), lbl, std::nullopt)) {
      auto* lit = std::get_if<rdf::Literal>(&t.object);
      if (!lit || lit->datatype()) continue;
      labels[lit->language().value_or("")].push_back(lit->lexical());
      consume(t);
    }
    return labels;
  };
  auto read_parents = [&](const Iri& id) {
    std::set<ConceptId> parents;
    for (const auto& t : graph.match(Term(id), sc, std::nullopt))
      if (auto* p = std::get_if<Iri>(&t.object)) {
        parents.insert(*p);
        consume(t);
      }
    return parents;
  };

  OntologyBuilder builder(std::move(base_namespace));
  for (const auto& id : order) {
    auto m = metas.find(id);
    if (m == metas.end()) continue;
    Concept c{id, read_labels(id), m->second, read_parents(id), std::nullopt};
    for (const auto& t : graph.match(Term(id), meta, std::nullopt)) consume(t);
    for (const auto& t : graph.match(Term(id), type, Term(owl_class))) consume(t);
    auto comments = graph.match(Term(id), cmt, std::nullopt);
    if (comments.size() > 1) throw StructureError("multiple definitions on " + id.str());
    if (!comments.empty()) {
      auto* lit = std::get_if<rdf::Literal>(&comments.front().object);
      if (!lit) throw StructureError("definition must be a literal on " + id.str());
      c.definition = lit->lexical();
      consume(comments.front());
    }
    builder.add_concept(std::move(c));
  }

  for (const auto& id : order) {
    if (!relationship_ids.count(id)) continue;
    ReifiedRelationshipClass r{id, {}, read_parents(id), read_labels(id)};
    for (const auto& t : graph.match(Term(id), type, Term(owl_class))) consume(t);
    int declared = 0;
    for (const auto& prop : order) {
      if (!argument_props.count(prop)) continue;
      auto domains = graph.match(Term(prop), dom, std::nullopt);
      if (domains.size() != 1)
        throw StructureError("argument property needs exactly one domain: " + prop.str());
      if (domains.front().object != Term(id)) continue;
      consume(domains.front());
      ++declared;
      auto ranges = graph.match(Term(prop), rng, std::nullopt);
      if (ranges.size() != 1 || !rdf::is_iri(ranges.front().object))
        throw StructureError("argument property needs exactly one range class: " + prop.str());
      consume(ranges.front());
      ArgumentRole a{prop, std::get<Iri>(ranges.front().object), declared, {}};
      auto positions = graph.match(Term(prop), pos, std::nullopt);
      if (positions.size() > 1) throw StructureError("multiple positions on " + prop.str());
      if (!positions.empty()) {
        auto* lit = std::get_if<rdf::Literal>(&positions.front().object);
        int value = 0;
        if (!lit || std::from_chars(lit->lexical().data(),
                                    lit->lexical().data() + lit->lexical().size(), value)
                            .ec != std::errc{})
          throw StructureError("argument position must be an integer on " + prop.str());
        a.position = value;
        consume(positions.front());
      }
      for (const auto& t : graph.match(Term(prop), lbl, std::nullopt)) {
        auto* lit = std::get_if<rdf::Literal>(&t.object);
        if (lit && !lit->language() && !lit->datatype() && a.label.empty()) {
          a.label = lit->lexical();
          consume(t);
        }
      }
      for (const auto& t : graph.match(Term(prop), sp, Term(has_arg))) consume(t);
      r.arguments.push_back(std::move(a));
    }
    builder.add_relationship(std::move(r));
  }

  for (const auto& t : graph.triples())
    if (!consumed.count(t)) builder.add_extra(t);
  auto defaults = vocab::template_prefixes();
  for (const auto& entry : graph.prefixes())
    if (std::find(defaults.begin(), defaults.end(), entry) == defaults.end())
      builder.add_prefix(entry.first, entry.second);
  return builder.build();
}

inline OntologyGraph load_ontology(std::string_view turtle) {
  return ontology_from_graph(rdf::parse_turtle(turtle));
}

}  // namespace mathlod::ontology
