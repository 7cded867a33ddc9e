#pragma once

#include <string>
#include <string_view>

#include "mathlod/rdf/term.hpp"

// Namespaces and terms shared across the ontology, translator and lexicon.
namespace mathlod::vocab {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kOmp = "http://ontomathpro.org/omp2#";
inline constexpr std::string_view kLexicons = "http://ontomathpro.org/lexicons/";
inline constexpr std::string_view kOntolex = "http://www.w3.org/ns/lemon/ontolex#";
inline constexpr std::string_view kSynsem = "http://www.w3.org/ns/lemon/synsem#";
inline constexpr std::string_view kLexinfo = "http://www.lexinfo.net/ontology/2.0/lexinfo#";

inline rdf::Iri iri(std::string_view ns, std::string_view local) {
  return rdf::Iri(std::string(ns) + std::string(local));
}

inline rdf::Iri rdf(std::string_view local) { return iri(kRdf, local); }
inline rdf::Iri rdfs(std::string_view local) { return iri(kRdfs, local); }
inline rdf::Iri owl(std::string_view local) { return iri(kOwl, local); }
inline rdf::Iri xsd(std::string_view local) { return iri(kXsd, local); }
inline rdf::Iri omp(std::string_view local) { return iri(kOmp, local); }
inline rdf::Iri ontolex(std::string_view local) { return iri(kOntolex, local); }
inline rdf::Iri synsem(std::string_view local) { return iri(kSynsem, local); }
inline rdf::Iri lexinfo(std::string_view local) { return iri(kLexinfo, local); }

inline rdf::Iri type() { return rdf("type"); }
inline rdf::Iri sub_class_of() { return rdfs("subClassOf"); }
inline rdf::Iri sub_property_of() { return rdfs("subPropertyOf"); }
inline rdf::Iri domain() { return rdfs("domain"); }
inline rdf::Iri range() { return rdfs("range"); }
inline rdf::Iri label() { return rdfs("label"); }
inline rdf::Iri comment() { return rdfs("comment"); }
inline rdf::Iri has_argument() { return omp("hasArgument"); }
inline rdf::Iri meta_type() { return omp("metaOntologicalType"); }
inline rdf::Iri argument_position() { return omp("argumentPosition"); }

/// The four prefixes of the reified-relationship template, in order.
inline rdf::RdfGraph::PrefixMap template_prefixes() {
  return {{"rdf", std::string(kRdf)},
          {"rdfs", std::string(kRdfs)},
          {"owl", std::string(kOwl)},
          {"omp", std::string(kOmp)}};
}

/// The five prefixes of the LLOD lexicon listing, in order.
inline rdf::RdfGraph::PrefixMap lexicon_prefixes(std::string_view lexicon_ns = kLexicons) {
  return {{"", std::string(lexicon_ns)},
          {"omp", std::string(kOmp)},
          {"ontolex", std::string(kOntolex)},
          {"synsem", std::string(kSynsem)},
          {"lexinfo", std::string(kLexinfo)}};
}

inline void apply_prefixes(rdf::RdfGraph& g, const rdf::RdfGraph::PrefixMap& prefixes) {
  for (const auto& [p, ns] : prefixes) g.set_prefix(p, ns);
}

}  // namespace mathlod::vocab
