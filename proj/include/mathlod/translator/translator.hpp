#pragma once

// FOL atom -> reified-relationship RDF graph, the interpretation mapping t,
// and the model-theoretic check  t(M_FOL(T ∪ {s})) ⊆ M_RDF(*(s) ∪ o).

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mathlod/error.hpp"
#include "mathlod/fol/fol.hpp"
#include "mathlod/fol/models.hpp"
#include "mathlod/ontology/ontology.hpp"
#include "mathlod/ontology/schema.hpp"
#include "mathlod/rdf/semantics.hpp"
#include "mathlod/rdf/term.hpp"
#include "mathlod/rdf/vocab.hpp"
#include "mathlod/translator/mapping.hpp"

namespace mathlod::translator {

struct TranslationResult {
  rdf::RdfGraph graph;
  rdf::BlankNode relationship_node;
};

namespace detail {

/// Template prefixes plus one prefix per cmap namespace ("" for the first).
inline rdf::RdfGraph::PrefixMap output_prefixes(const SymbolMapping& mapping) {
  auto prefixes = vocab::template_prefixes();
  std::set<std::string> bound;
  for (const auto& [p, ns] : prefixes) bound.insert(ns);
  std::size_t counter = 0;
  auto bind = [&](const std::string& ns) {
    if (!bound.insert(ns).second) return;
    prefixes.emplace_back(counter == 0 ? std::string() : "ns" + std::to_string(counter), ns);
    ++counter;
  };
  if (auto primary = mapping.primary_namespace()) bind(*primary);
  for (const auto& [name, target] : mapping.cmap) bind(target.namespace_part());
  return prefixes;
}

inline void emit_atom(rdf::RdfGraph& g, const rdf::BlankNode& node, const fol::AtomicSentence& s,
                      const SymbolMapping& mapping, const OntologyGraph& onto, TranslationMode mode) {
  const auto& rel = mapped_relationship(mapping, onto, s.predicate);
  std::vector<Iri> properties;
  if (mode == TranslationMode::role_properties) {
    for (const auto& a : argument_roles(mapping, rel)) properties.push_back(a.property);
    if (properties.size() != s.args.size())
      throw MappingError(rel.id.str() + " has " + std::to_string(properties.size()) +
                         " argument properties but " + fol::format_sentence(s) + " has " +
                         std::to_string(s.args.size()) + " arguments");
  } else {
    properties.assign(s.args.size(), vocab::has_argument());
  }
  std::vector<Iri> objects;
  for (const auto& c : s.args) objects.push_back(mapping.constant_target(c));
  g.add(node, vocab::type(), rel.id);
  for (std::size_t k = 0; k < s.args.size(); ++k) g.add(node, properties[k], objects[k]);
}

}  // namespace detail

/// Generic mode emits `_:rel rdf:type pmap(R)` and one omp:hasArgument triple
/// per argument; role_properties mode uses the relationship's positional
/// argument properties instead. Repeated arguments collapse under set
/// semantics only in generic mode (e.g. R(a, a)).
inline TranslationResult translate(const fol::AtomicSentence& s, const SymbolMapping& mapping,
                                   const OntologyGraph& onto, TranslationMode mode) {
  TranslationResult out{rdf::RdfGraph(), rdf::BlankNode("rel")};
  vocab::apply_prefixes(out.graph, detail::output_prefixes(mapping));
  detail::emit_atom(out.graph, out.relationship_node, s, mapping, onto, mode);
  return out;
}

/// All axioms of a theory, one relationship node each (`rel1`, `rel2`, ...).
inline rdf::RdfGraph translate_theory(const fol::Theory& theory, const SymbolMapping& mapping,
                                      const OntologyGraph& onto, TranslationMode mode) {
  rdf::RdfGraph g;
  vocab::apply_prefixes(g, detail::output_prefixes(mapping));
  std::size_t k = 0;
  for (const auto& s : theory.axioms)
    detail::emit_atom(g, rdf::BlankNode("rel" + std::to_string(++k)), s, mapping, onto, mode);
  return g;
}

/// The mapping t. Resources: domain elements first (`e<k>`), then one
/// relationship resource per predicate tuple (`rel:R(a,b)`), then one per
/// vocabulary IRI (schema IRIs, rdf:type, omp:hasArgument, pmap targets,
/// their argument properties and role concepts). Class and property
/// extensions are closed upward along the schema's subClassOf and
/// subPropertyOf triples.
inline rdf::RdfInterpretation map_interpretation(const fol::FolInterpretation& i,
                                                 const SymbolMapping& mapping,
                                                 const OntologyGraph& onto,
                                                 const rdf::RdfGraph& schema, TranslationMode mode) {
  rdf::RdfInterpretation out;
  std::map<fol::Element, rdf::Resource> element;
  for (fol::Element e : i.domain) element[e] = out.add_resource("e" + std::to_string(e));

  struct Instance {
    rdf::Resource node;
    Iri cls;
    std::vector<std::pair<Iri, rdf::Resource>> args;  // property, element
    std::vector<std::pair<Iri, rdf::Resource>> roles;  // role concept, element
  };
  std::vector<Instance> instances;
  for (const auto& [pred, ext] : i.pred_map) {
    if (ext.empty()) continue;
    const auto& rel = mapped_relationship(mapping, onto, pred);
    std::vector<ontology::ArgumentRole> roles;
    if (mode == TranslationMode::role_properties) roles = argument_roles(mapping, rel);
    for (const auto& tuple : ext) {
      if (mode == TranslationMode::role_properties && roles.size() != tuple.size())
        throw MappingError(rel.id.str() + " argument count does not match arity of " + pred);
      std::string label = "rel:" + pred + "(";
      for (std::size_t k = 0; k < tuple.size(); ++k) label += (k ? "," : "") + std::to_string(tuple[k]);
      Instance inst{out.add_resource(label + ")"), rel.id, {}, {}};
      for (std::size_t k = 0; k < tuple.size(); ++k) {
        auto it = element.find(tuple[k]);
        if (it == element.end()) throw ContractError("tuple element outside the domain");
        if (mode == TranslationMode::role_properties) {
          inst.args.emplace_back(roles[k].property, it->second);
          inst.roles.emplace_back(roles[k].role_concept, it->second);
        } else {
          inst.args.emplace_back(vocab::has_argument(), it->second);
        }
      }
      instances.push_back(std::move(inst));
    }
  }

  std::set<Iri> constant_iris;
  for (const auto& [c, e] : i.const_map) constant_iris.insert(mapping.constant_target(c));

  std::vector<Iri> vocabulary = schema.iris();
  vocabulary.push_back(vocab::type());
  vocabulary.push_back(vocab::has_argument());
  for (const auto& [pred, target] : mapping.pmap) {
    vocabulary.push_back(target);
    if (const auto* rel = onto.find_relationship(target))
      for (const auto& a : rel->arguments) {
        vocabulary.push_back(a.property);
        vocabulary.push_back(a.role_concept);
      }
  }
  for (const auto& iri : vocabulary) {
    if (out.iri_denotation.count(iri)) continue;
    if (constant_iris.count(iri))
      throw MappingError("constant IRI " + iri.str() + " collides with ontology vocabulary");
    out.iri_denotation[iri] = out.add_resource(iri.str());
  }
  for (const auto& [c, e] : i.const_map) {
    auto it = element.find(e);
    if (it == element.end()) throw ContractError("constant " + c + " denotes an element outside the domain");
    out.iri_denotation[mapping.constant_target(c)] = it->second;
  }

  auto cond = rdf::rdfs_conditions(schema);
  auto res = [&](const Iri& iri) {
    auto r = out.denotation(iri);
    if (!r) throw ContractError("no resource for " + iri.str());
    return *r;
  };
  for (const auto& inst : instances) {
    for (const auto& cls : rdf::upward_closure(inst.cls, cond.sub_class))
      out.add_to_class(res(cls), inst.node);
    for (const auto& [prop, value] : inst.args)
      for (const auto& p : rdf::upward_closure(prop, cond.sub_property))
        out.add_pair(res(p), inst.node, value);
    for (const auto& [role, value] : inst.roles)
      for (const auto& cls : rdf::upward_closure(role, cond.sub_class))
        out.add_to_class(res(cls), value);
  }
  return out;
}

inline rdf::RdfInterpretation map_interpretation(const fol::FolInterpretation& i,
                                                 const SymbolMapping& mapping,
                                                 const OntologyGraph& onto, TranslationMode mode) {
  return map_interpretation(i, mapping, onto, ontology::to_schema_graph(onto), mode);
}

struct ConditionReport {
  bool passed = true;
  std::size_t models_checked = 0;
  /// Some RDF model of *(s) ∪ o has no FOL preimage (witness-based).
  bool strict = false;
  TranslationMode translation_mode = TranslationMode::generic;
  TranslationMode interpretation_mode = TranslationMode::generic;
  std::optional<fol::FolInterpretation> counterexample;
  std::optional<rdf::RdfInterpretation> counterexample_image;

  /// First line `PASS checked=N strict=yes|no` or `FAIL checked=N`, then the
  /// counterexample on failure.
  std::string to_text() const {
    std::ostringstream out;
    if (passed) {
      out << "PASS checked=" << models_checked << " strict=" << (strict ? "yes" : "no") << "\n";
      return out.str();
    }
    out << "FAIL checked=" << models_checked << "\n";
    if (counterexample) {
      out << "counterexample:\n" << counterexample->dump("  ");
      if (counterexample_image) out << "  image:\n" << counterexample_image->dump("    ");
    }
    return out.str();
  }
};

/// Necessary condition for having a preimage under t: every resource typed
/// by a mapped relationship class has at least one outgoing property pair.
inline bool has_preimage_shape(const rdf::RdfInterpretation& interp, const SymbolMapping& mapping) {
  for (const auto& [pred, target] : mapping.pmap) {
    auto cls = interp.denotation(target);
    if (!cls) continue;
    for (rdf::Resource r : interp.members(*cls)) {
      bool linked = false;
      for (const auto& [p, ext] : interp.property_ext)
        for (const auto& pair : ext)
          if (pair.first == r) linked = true;
      if (!linked) return false;
    }
  }
  return true;
}

namespace detail {

inline bool supports_role_properties(const fol::Signature& sig, const SymbolMapping& mapping,
                                     const OntologyGraph& onto) {
  for (const auto& [pred, arity] : sig.predicates) {
    const auto& rel = mapped_relationship(mapping, onto, pred);
    if (argument_roles(mapping, rel).size() != static_cast<std::size_t>(arity)) return false;
  }
  return true;
}

}  // namespace detail

/// Checks every FOL model of T ∪ {s} over a domain of `domain_size`
/// elements. The translation uses `mode`; t uses the relationship argument
/// properties whenever the ontology declares them for every predicate, so
/// generic-mode translations are checked through subproperty closure.
inline ConditionReport check_semantic_condition(const fol::Theory& theory, const fol::AtomicSentence& s,
                                                const SymbolMapping& mapping, const OntologyGraph& onto,
                                                const rdf::RdfGraph& schema, std::size_t domain_size,
                                                TranslationMode mode) {
  ConditionReport report;
  report.translation_mode = mode;
  report.interpretation_mode = detail::supports_role_properties(theory.signature, mapping, onto)
                                   ? TranslationMode::role_properties
                                   : TranslationMode::generic;
  const rdf::RdfGraph graph = translate(s, mapping, onto, mode).graph;
  auto models = fol::enumerate_fol_models(theory, s, domain_size);

  std::optional<rdf::RdfInterpretation> first_image;
  while (auto model = models.next()) {
    auto image = map_interpretation(*model, mapping, onto, schema, report.interpretation_mode);
    ++report.models_checked;
    if (!rdf::rdf_satisfies(image, graph, schema)) {
      report.passed = false;
      report.counterexample = std::move(*model);
      report.counterexample_image = std::move(image);
      return report;
    }
    if (!first_image) first_image = std::move(image);
  }

  // Witness: an extra relationship resource with no participants.
  if (first_image) {
    auto witness = *first_image;
    auto cond = rdf::rdfs_conditions(schema);
    rdf::Resource extra = witness.add_resource("rel:*");
    for (const auto& cls : rdf::upward_closure(mapping.predicate_target(s.predicate), cond.sub_class))
      if (auto r = witness.denotation(cls)) witness.add_to_class(*r, extra);
    report.strict = rdf::rdf_satisfies(witness, graph, schema) && !has_preimage_shape(witness, mapping);
  }
  return report;
}

inline ConditionReport check_semantic_condition(const fol::Theory& theory, const fol::AtomicSentence& s,
                                                const SymbolMapping& mapping, const OntologyGraph& onto,
                                                std::size_t domain_size, TranslationMode mode) {
  return check_semantic_condition(theory, s, mapping, onto, ontology::to_schema_graph(onto),
                                  domain_size, mode);
}

}  // namespace mathlod::translator
