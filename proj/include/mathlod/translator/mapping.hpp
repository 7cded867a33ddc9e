#pragma once

// Symbol mapping from FOL predicates/constants to ontology IRIs.
//
// JSON document:
//   {
//     "data_namespace": "http://ontomathpro.org/instances/",   (optional)
//     "pmap": { "Divides": "http://ontomathpro.org/omp2#Divisibility_relationship" },
//     "cmap": { "m": "http://ontomathpro.org/instances/m", ... },
//     "argument_order": { "<relationship IRI>": ["<property IRI>", ...] },  (optional)
//     "mode": "generic" | "role-properties"                     (optional)
//   }

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mathlod/error.hpp"
#include "mathlod/fol/fol.hpp"
#include "mathlod/ontology/ontology.hpp"
#include "mathlod/rdf/term.hpp"

namespace mathlod::translator {

using ontology::OntologyGraph;
using rdf::Iri;

enum class TranslationMode { generic, role_properties };

inline std::string_view to_string(TranslationMode m) {
  return m == TranslationMode::generic ? "generic" : "role-properties";
}

inline TranslationMode parse_mode(std::string_view text) {
  if (text == "generic") return TranslationMode::generic;
  if (text == "role-properties" || text == "role_properties") return TranslationMode::role_properties;
  throw ConfigError("unknown translation mode '" + std::string(text) + "'");
}

struct SymbolMapping {
  std::map<std::string, Iri> pmap;
  std::map<std::string, Iri> cmap;
  std::optional<Iri> data_namespace;
  std::map<Iri, std::vector<Iri>> argument_order;
  std::optional<TranslationMode> mode;

  const Iri& predicate_target(const std::string& name) const {
    auto it = pmap.find(name);
    if (it == pmap.end()) throw MappingError("pmap has no entry for predicate " + name);
    return it->second;
  }
  const Iri& constant_target(const std::string& name) const {
    auto it = cmap.find(name);
    if (it == cmap.end()) throw MappingError("cmap has no entry for constant " + name);
    return it->second;
  }

  /// Namespace bound to the empty prefix in translation output.
  std::optional<std::string> primary_namespace() const {
    if (data_namespace) return data_namespace->str();
    if (cmap.empty()) return std::nullopt;
    return cmap.begin()->second.namespace_part();
  }
};

/// Parses the JSON mapping document. Malformed JSON is a ParseError; wrong
/// field types or invalid IRIs are MappingErrors.
inline SymbolMapping load_mapping(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("mapping is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MappingError("mapping document must be a JSON object");

  auto iri = [](const nlohmann::json& v, const std::string& where) {
    if (!v.is_string()) throw MappingError(where + " must be a string IRI");
    try {
      return Iri(v.get<std::string>());
    } catch (const ContractError& e) {
      throw MappingError(where + ": " + e.what());
    }
  };
  auto table = [&](const char* key, std::map<std::string, Iri>& out) {
    if (!doc.contains(key)) return;
    const auto& obj = doc.at(key);
    if (!obj.is_object()) throw MappingError(std::string(key) + " must be an object");
    for (const auto& [name, value] : obj.items()) {
      if (!fol::valid_symbol(name)) throw MappingError("invalid symbol name '" + name + "'");
      out.emplace(name, iri(value, std::string(key) + "." + name));
    }
  };

  SymbolMapping m;
  table("pmap", m.pmap);
  table("cmap", m.cmap);
  if (doc.contains("data_namespace")) m.data_namespace = iri(doc.at("data_namespace"), "data_namespace");
  if (doc.contains("argument_order")) {
    const auto& obj = doc.at("argument_order");
    if (!obj.is_object()) throw MappingError("argument_order must be an object");
    for (const auto& [rel, list] : obj.items()) {
      if (!list.is_array()) throw MappingError("argument_order entries must be arrays");
      std::vector<Iri> props;
      for (const auto& p : list) props.push_back(iri(p, "argument_order"));
      m.argument_order.emplace(iri(rel, "argument_order key"), std::move(props));
    }
  }
  if (doc.contains("mode")) {
    if (!doc.at("mode").is_string()) throw MappingError("mode must be a string");
    try {
      m.mode = parse_mode(doc.at("mode").get<std::string>());
    } catch (const ConfigError& e) {
      throw MappingError(e.what());
    }
  }
  return m;
}

/// Argument properties of a relationship class in positional order, taking
/// the mapping's argument_order override into account.
inline std::vector<ontology::ArgumentRole> argument_roles(const SymbolMapping& mapping,
                                                          const ontology::ReifiedRelationshipClass& rel) {
  auto it = mapping.argument_order.find(rel.id);
  if (it == mapping.argument_order.end()) return rel.ordered_arguments();
  std::vector<ontology::ArgumentRole> out;
  for (const auto& p : it->second) {
    const auto* a = rel.find_argument(p);
    if (!a) throw MappingError(p.str() + " is not an argument of " + rel.id.str());
    out.push_back(*a);
  }
  return out;
}

inline const ontology::ReifiedRelationshipClass& mapped_relationship(const SymbolMapping& mapping,
                                                                      const OntologyGraph& onto,
                                                                      const std::string& predicate) {
  const Iri& target = mapping.predicate_target(predicate);
  const auto* rel = onto.find_relationship(target);
  if (!rel)
    throw MappingError("pmap target " + target.str() + " is not a relationship class of the ontology");
  return *rel;
}

/// Signature implied by a mapping: every pmap predicate with the arity of
/// its relationship class (or argument_order override), every cmap constant.
inline fol::Signature signature_from_mapping(const SymbolMapping& mapping, const OntologyGraph& onto) {
  fol::Signature sig;
  for (const auto& [name, target] : mapping.pmap) {
    const auto& rel = mapped_relationship(mapping, onto, name);
    auto roles = argument_roles(mapping, rel);
    if (roles.empty()) throw MappingError("relationship " + target.str() + " declares no arguments");
    sig.add_predicate(name, static_cast<int>(roles.size()));
  }
  for (const auto& [name, target] : mapping.cmap) sig.add_constant(name);
  return sig;
}

}  // namespace mathlod::translator
