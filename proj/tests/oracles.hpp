#pragma once

// Reference implementations used only by the tests. They share data types
// with the library but none of its enumeration or satisfaction code.

#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mathlod/mathlod.hpp"

namespace oracle {

using namespace mathlod;

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(MATHLOD_DATA_DIR) + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(MATHLOD_GOLDEN_DIR) + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("missing golden file " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------- FOL ----

inline bool holds(const fol::FolInterpretation& m, const fol::AtomicSentence& s) {
  std::vector<int> tuple;
  for (const auto& c : s.args) tuple.push_back(m.const_map.at(c));
  const auto& ext = m.pred_map.at(s.predicate);
  return ext.find(tuple) != ext.end();
}

/// Every interpretation over {0..d-1}, generated first and filtered by
/// `required` afterwards.
inline std::set<fol::FolInterpretation> fol_models(const fol::Signature& sig,
                                                    const std::vector<fol::AtomicSentence>& required,
                                                    int d) {
  std::vector<std::string> consts(sig.constants.begin(), sig.constants.end());
  std::vector<std::pair<std::string, std::vector<int>>> slots;
  for (const auto& [p, arity] : sig.predicates) {
    std::vector<int> t(arity, 0);
    while (true) {
      slots.emplace_back(p, t);
      int k = arity - 1;
      while (k >= 0 && ++t[k] == d) t[k--] = 0;
      if (k < 0) break;
    }
  }

  std::vector<fol::FolInterpretation> all;
  std::size_t maps = 1;
  for (std::size_t i = 0; i < consts.size(); ++i) maps *= d;
  for (std::size_t cm = 0; cm < maps; ++cm) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
      fol::FolInterpretation m;
      for (int e = 0; e < d; ++e) m.domain.insert(e);
      std::size_t code = cm;
      for (const auto& c : consts) {
        m.const_map[c] = static_cast<int>(code % d);
        code /= d;
      }
      for (const auto& [p, arity] : sig.predicates) m.pred_map[p];
      for (std::size_t k = 0; k < slots.size(); ++k)
        if ((bits >> k) & 1U) m.pred_map[slots[k].first].insert(slots[k].second);
      all.push_back(std::move(m));
    }
  }

  std::set<fol::FolInterpretation> out;
  for (auto& m : all) {
    bool ok = true;
    for (const auto& s : required) ok = ok && holds(m, s);
    if (ok) out.insert(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------- RDF ----

inline std::size_t res_of(const rdf::RdfInterpretation& i, const rdf::Iri& iri) {
  return i.iri_denotation.at(iri);
}

inline bool in_class(const rdf::RdfInterpretation& i, std::size_t c, std::size_t m) {
  auto it = i.class_ext.find(c);
  return it != i.class_ext.end() && it->second.count(m) > 0;
}

inline bool has_pair(const rdf::RdfInterpretation& i, std::size_t p, std::size_t s, std::size_t o) {
  auto it = i.property_ext.find(p);
  return it != i.property_ext.end() && it->second.count({s, o}) > 0;
}

/// RDFS satisfaction of the four schema conditions, straight from the
/// definitions.
inline bool schema_holds(const rdf::RdfInterpretation& i, const rdf::RdfGraph& schema) {
  const std::size_t n = i.resources.size();
  for (const auto& t : schema.triples()) {
    const auto& p = t.predicate.str();
    const bool sc = p == "http://www.w3.org/2000/01/rdf-schema#subClassOf";
    const bool sp = p == "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
    const bool dom = p == "http://www.w3.org/2000/01/rdf-schema#domain";
    const bool rng = p == "http://www.w3.org/2000/01/rdf-schema#range";
    if (!sc && !sp && !dom && !rng) continue;
    auto a = res_of(i, std::get<rdf::Iri>(t.subject));
    auto b = res_of(i, std::get<rdf::Iri>(t.object));
    for (std::size_t x = 0; x < n; ++x) {
      if (sc && in_class(i, a, x) && !in_class(i, b, x)) return false;
      for (std::size_t y = 0; y < n; ++y) {
        if (!has_pair(i, a, x, y)) continue;
        if (sp && !has_pair(i, b, x, y)) return false;
        if (dom && !in_class(i, b, x)) return false;
        if (rng && !in_class(i, b, y)) return false;
      }
    }
  }
  return true;
}

/// Tries every blank-node assignment in full (no pruning).
inline bool satisfies(const rdf::RdfInterpretation& i, const rdf::RdfGraph& g, const rdf::RdfGraph& schema) {
  if (!schema_holds(i, schema)) return false;
  std::vector<rdf::BlankNode> blanks = g.blank_nodes();
  const std::size_t n = i.resources.size();
  std::vector<std::size_t> a(blanks.size(), 0);
  auto value = [&](const rdf::Term& t) -> std::size_t {
    if (auto* iri = std::get_if<rdf::Iri>(&t)) return res_of(i, *iri);
    const auto& b = std::get<rdf::BlankNode>(t);
    for (std::size_t k = 0; k < blanks.size(); ++k)
      if (blanks[k] == b) return a[k];
    throw std::logic_error("unknown blank node");
  };
  while (true) {
    bool ok = true;
    for (const auto& t : g.triples()) {
      std::size_t s = value(t.subject), o = value(t.object);
      if (t.predicate.str() == "http://www.w3.org/1999/02/22-rdf-syntax-ns#type")
        ok = ok && in_class(i, o, s);
      else
        ok = ok && has_pair(i, res_of(i, t.predicate), s, o);
      if (!ok) break;
    }
    if (ok) return true;
    if (n == 0) return blanks.empty() && ok;
    std::size_t k = 0;
    while (k < a.size() && ++a[k] == n) a[k++] = 0;
    if (k == a.size()) return false;
  }
}

/// Counts models over the same candidate space the library enumerates:
/// IRIs of graph then schema conditions, then `d` anonymous resources;
/// free class bits for class-position IRIs, free pair bits for
/// property-position IRIs.
inline std::size_t count_rdf_models(const rdf::RdfGraph& g, const rdf::RdfGraph& schema, std::size_t d) {
  const std::string type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
  std::vector<rdf::Iri> iris;
  auto add = [&](const rdf::Iri& x) {
    for (const auto& y : iris)
      if (y == x) return;
    iris.push_back(x);
  };
  for (const auto& t : g.triples()) {
    if (auto* s = std::get_if<rdf::Iri>(&t.subject)) add(*s);
    add(t.predicate);
    if (auto* o = std::get_if<rdf::Iri>(&t.object)) add(*o);
  }
  std::set<std::string> classes, props;
  for (const auto& t : g.triples()) {
    if (t.predicate.str() == type) {
      if (auto* o = std::get_if<rdf::Iri>(&t.object)) classes.insert(o->str());
    } else {
      props.insert(t.predicate.str());
    }
  }
  for (const auto& t : schema.triples()) {
    const auto& p = t.predicate.str();
    const std::string rdfs = "http://www.w3.org/2000/01/rdf-schema#";
    if (p != rdfs + "subClassOf" && p != rdfs + "subPropertyOf" && p != rdfs + "domain" && p != rdfs + "range")
      continue;
    const auto& s = std::get<rdf::Iri>(t.subject);
    const auto& o = std::get<rdf::Iri>(t.object);
    add(s);
    add(o);
    if (p == rdfs + "subClassOf") {
      classes.insert(s.str());
      classes.insert(o.str());
    } else if (p == rdfs + "subPropertyOf") {
      props.insert(s.str());
      props.insert(o.str());
    } else {
      props.insert(s.str());
      classes.insert(o.str());
    }
  }

  rdf::RdfInterpretation base;
  for (const auto& x : iris) base.iri_denotation[x] = base.add_resource(x.str());
  for (std::size_t k = 0; k < d; ++k) base.add_resource("anon");
  const std::size_t n = base.resources.size();

  struct Bit { bool prop; std::size_t owner, a, b; };
  std::vector<Bit> bits;
  for (const auto& c : classes)
    for (std::size_t m = 0; m < n; ++m) bits.push_back({false, base.iri_denotation.at(rdf::Iri(c)), m, 0});
  for (const auto& p : props)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t o = 0; o < n; ++o) bits.push_back({true, base.iri_denotation.at(rdf::Iri(p)), s, o});

  std::size_t count = 0;
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << bits.size()); ++pattern) {
    auto interp = base;
    for (std::size_t k = 0; k < bits.size(); ++k) {
      if (!((pattern >> k) & 1U)) continue;
      if (bits[k].prop) interp.property_ext[bits[k].owner].insert({bits[k].a, bits[k].b});
      else interp.class_ext[bits[k].owner].insert(bits[k].a);
    }
    if (satisfies(interp, g, schema)) ++count;
  }
  return count;
}

/// Brute-force isomorphism: tries every bijection between blank nodes.
inline bool isomorphic(const rdf::RdfGraph& a, const rdf::RdfGraph& b) {
  if (a.size() != b.size()) return false;
  auto ba = a.blank_nodes(), bb = b.blank_nodes();
  if (ba.size() != bb.size()) return false;
  std::vector<std::size_t> perm(bb.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
  std::set<rdf::Triple> target(b.triples().begin(), b.triples().end());
  do {
    auto map = [&](const rdf::Term& t) -> rdf::Term {
      if (auto* x = std::get_if<rdf::BlankNode>(&t))
        for (std::size_t k = 0; k < ba.size(); ++k)
          if (ba[k] == *x) return bb[perm[k]];
      return t;
    };
    bool ok = true;
    for (const auto& t : a.triples())
      if (!target.count(rdf::Triple(map(t.subject), t.predicate, map(t.object)))) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// ------------------------------------------------------------- random ----

inline rdf::Iri random_iri(std::mt19937& rng) {
  static const char* kNs[] = {"http://example.org/a#", "http://example.org/b/", "http://ontomathpro.org/omp2#",
                              "urn:x:"};
  static const char* kLocal[] = {"p", "q", "Thing", "has-part", "x1", "Natural_number", "a.b", "z9", "r_2"};
  std::uniform_int_distribution<int> ns(0, 3), local(0, 8), odd(0, 9);
  std::string s = std::string(kNs[ns(rng)]) + kLocal[local(rng)];
  if (odd(rng) == 0) s += "/tail";  // not a legal local name under any prefix
  return rdf::Iri(s);
}

inline rdf::Literal random_literal(std::mt19937& rng) {
  static const char* kText[] = {"plain", "with \"quotes\"", "back\\slash", "line\nbreak", "tab\there",
                                "натуральное число", "", "x y z"};
  std::uniform_int_distribution<int> text(0, 7), kind(0, 2);
  std::string lex = kText[text(rng)];
  switch (kind(rng)) {
    case 0: return rdf::Literal(lex);
    case 1: return rdf::Literal::lang(lex, "en");
    default: return rdf::Literal::typed(lex, rdf::Iri("http://www.w3.org/2001/XMLSchema#string"));
  }
}

inline rdf::RdfGraph random_graph(std::mt19937& rng, std::size_t max_triples = 12) {
  rdf::RdfGraph g;
  std::uniform_int_distribution<int> pick(0, 3), pfx(0, 1);
  std::uniform_int_distribution<std::size_t> count(1, max_triples), blank(0, 3);
  if (pfx(rng)) g.set_prefix("ex", "http://example.org/a#");
  if (pfx(rng)) g.set_prefix("omp", "http://ontomathpro.org/omp2#");
  if (pfx(rng)) g.set_prefix("rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#");
  if (pfx(rng)) g.set_prefix("", "http://example.org/b/");
  const std::size_t n = count(rng);
  for (std::size_t k = 0; k < n; ++k) {
    rdf::Term s = pick(rng) == 0 ? rdf::Term(rdf::BlankNode("b" + std::to_string(blank(rng))))
                                 : rdf::Term(random_iri(rng));
    rdf::Iri p = pick(rng) == 0 ? rdf::Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type") : random_iri(rng);
    const int kind = pick(rng);
    rdf::Term o = kind == 0   ? rdf::Term(rdf::BlankNode("b" + std::to_string(blank(rng))))
                  : kind == 1 ? rdf::Term(random_literal(rng))
                              : rdf::Term(random_iri(rng));
    g.add(std::move(s), std::move(p), std::move(o));
  }
  return g;
}

/// Relabels blank nodes and shuffles triple order.
inline rdf::RdfGraph scramble(const rdf::RdfGraph& g, std::mt19937& rng) {
  auto triples = g.triples();
  std::shuffle(triples.begin(), triples.end(), rng);
  auto rename = [](const rdf::Term& t) -> rdf::Term {
    if (auto* b = std::get_if<rdf::BlankNode>(&t)) return rdf::BlankNode("z" + b->label());
    return t;
  };
  rdf::RdfGraph out;
  for (const auto& t : triples) out.add(rename(t.subject), t.predicate, rename(t.object));
  return out;
}

// ----------------------------------------------------------- ontology ----

/// Random valid ontology: kinds form a forest, each role hangs below a kind
/// or an earlier role.
inline ontology::OntologyGraph random_ontology(std::mt19937& rng) {
  std::uniform_int_distribution<int> kinds_n(1, 4), roles_n(0, 5), coin(0, 1), rels_n(0, 2);
  ontology::OntologyBuilder b;
  std::vector<rdf::Iri> kinds, roles;
  const int nk = kinds_n(rng);
  for (int k = 0; k < nk; ++k) {
    rdf::Iri id = vocab::omp("K" + std::to_string(k));
    std::set<rdf::Iri> parents;
    if (!kinds.empty() && coin(rng)) parents.insert(kinds[rng() % kinds.size()]);
    b.kind(id, coin(rng) ? "kind " + std::to_string(k) : "", parents);
    kinds.push_back(id);
  }
  const int nr = roles_n(rng);
  for (int k = 0; k < nr; ++k) {
    rdf::Iri id = vocab::omp("R" + std::to_string(k));
    std::set<rdf::Iri> parents{kinds[rng() % kinds.size()]};
    if (!roles.empty() && coin(rng)) parents = {roles[rng() % roles.size()]};
    b.role(id, "", parents);
    roles.push_back(id);
  }
  if (!roles.empty()) {
    const int nrel = rels_n(rng);
    for (int k = 0; k < nrel; ++k) {
      ontology::ReifiedRelationshipClass r{vocab::omp("Rel" + std::to_string(k)), {}, {}, {}};
      const int args = 1 + static_cast<int>(rng() % 3);
      for (int a = 0; a < args; ++a)
        r.arguments.push_back({vocab::omp("rel" + std::to_string(k) + "arg" + std::to_string(a)),
                               roles[rng() % roles.size()], a + 1, {}});
      b.add_relationship(r);
    }
  }
  return b.build();
}

/// Repeatedly strips subClassOf edges whose target has no outgoing edge.
inline bool subclass_acyclic(const rdf::RdfGraph& g) {
  std::set<std::pair<rdf::Iri, rdf::Iri>> edges;
  for (const auto& t : g.match(std::nullopt, vocab::sub_class_of(), std::nullopt))
    edges.insert({std::get<rdf::Iri>(t.subject), std::get<rdf::Iri>(t.object)});
  bool progress = true;
  while (!edges.empty() && progress) {
    progress = false;
    std::set<rdf::Iri> sources;
    for (const auto& [a, b] : edges) sources.insert(a);
    for (auto it = edges.begin(); it != edges.end();) {
      if (!sources.count(it->second)) {
        it = edges.erase(it);
        progress = true;
      } else {
        ++it;
      }
    }
  }
  return edges.empty();
}

/// Every Role-typed subject reaches a Kind-typed class along subClassOf.
inline bool roles_reach_kind(const rdf::RdfGraph& g) {
  const rdf::Iri sc = vocab::sub_class_of(), meta = vocab::meta_type();
  for (const auto& t : g.match(std::nullopt, meta, rdf::Term(vocab::omp("Role")))) {
    std::vector<rdf::Term> frontier{t.subject};
    std::set<rdf::Term> seen;
    bool reached = false;
    while (!frontier.empty() && !reached) {
      auto cur = frontier.back();
      frontier.pop_back();
      for (const auto& parent : g.objects(cur, sc)) {
        if (!seen.insert(parent).second) continue;
        if (g.contains(rdf::Triple(parent, meta, vocab::omp("Kind")))) reached = true;
        frontier.push_back(parent);
      }
    }
    if (!reached) return false;
  }
  return true;
}

}  // namespace oracle
