#pragma once

// Finite RDF interpretations and RDFS-level satisfaction.
//
// A graph is satisfied when some assignment of its blank nodes to resources
// makes every triple true (rdf:type triples through class extensions, all
// others through property extensions) and the interpretation respects the
// subClassOf / subPropertyOf / domain / range conditions of the schema.
// Other schema triples (owl:Class declarations, labels, annotations) are
// inert: they neither constrain the interpretation nor need a denotation.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mathlod/error.hpp"
#include "mathlod/rdf/term.hpp"
#include "mathlod/rdf/vocab.hpp"

namespace mathlod::rdf {

using Resource = std::size_t;
using ResourcePair = std::pair<Resource, Resource>;

/// Resources are the indices 0..resources.size()-1; the strings are labels
/// used only for display. Empty extensions are never stored.
struct RdfInterpretation {
  std::vector<std::string> resources;
  std::map<Iri, Resource> iri_denotation;
  std::map<Resource, std::set<ResourcePair>> property_ext;
  std::map<Resource, std::set<Resource>> class_ext;

  Resource add_resource(std::string label) {
    resources.push_back(std::move(label));
    return resources.size() - 1;
  }

  void add_to_class(Resource cls, Resource member) { class_ext[cls].insert(member); }
  void add_pair(Resource prop, Resource s, Resource o) {
    property_ext[prop].insert({s, o});
  }

  bool in_class(Resource cls, Resource member) const {
    auto it = class_ext.find(cls);
    return it != class_ext.end() && it->second.count(member);
  }
  bool has_pair(Resource prop, Resource s, Resource o) const {
    auto it = property_ext.find(prop);
    return it != property_ext.end() && it->second.count({s, o});
  }

  const std::set<Resource>& members(Resource cls) const {
    static const std::set<Resource> empty;
    auto it = class_ext.find(cls);
    return it == class_ext.end() ? empty : it->second;
  }
  const std::set<ResourcePair>& pairs(Resource prop) const {
    static const std::set<ResourcePair> empty;
    auto it = property_ext.find(prop);
    return it == property_ext.end() ? empty : it->second;
  }

  std::optional<Resource> denotation(const Iri& iri) const {
    auto it = iri_denotation.find(iri);
    if (it == iri_denotation.end()) return std::nullopt;
    return it->second;
  }

  /// Throws ContractError when an extension mentions an unknown resource.
  void check_invariants() const {
    auto known = [&](Resource r) { return r < resources.size(); };
    for (const auto& [iri, r] : iri_denotation)
      if (!known(r)) throw ContractError("denotation of " + iri.str() + " is not a resource");
    for (const auto& [p, ext] : property_ext) {
      if (!known(p)) throw ContractError("property extension keyed by unknown resource");
      for (const auto& [s, o] : ext)
        if (!known(s) || !known(o)) throw ContractError("property extension mentions unknown resource");
    }
    for (const auto& [c, ext] : class_ext) {
      if (!known(c)) throw ContractError("class extension keyed by unknown resource");
      for (Resource m : ext)
        if (!known(m)) throw ContractError("class extension mentions unknown resource");
    }
  }

  /// Human-readable dump, one fact per line.
  std::string dump(std::string_view indent = "") const {
    std::ostringstream out;
    out << indent << "resources: " << resources.size() << "\n";
    for (const auto& [iri, r] : iri_denotation)
      out << indent << "  <" << iri.str() << "> -> " << resources[r] << "\n";
    for (const auto& [c, ext] : class_ext) {
      out << indent << "  class " << resources[c] << " = {";
      bool first = true;
      for (Resource m : ext) {
        out << (first ? "" : ", ") << resources[m];
        first = false;
      }
      out << "}\n";
    }
    for (const auto& [p, ext] : property_ext) {
      out << indent << "  property " << resources[p] << " = {";
      bool first = true;
      for (const auto& [s, o] : ext) {
        out << (first ? "" : ", ") << "(" << resources[s] << ", " << resources[o] << ")";
        first = false;
      }
      out << "}\n";
    }
    return out.str();
  }

  friend bool operator==(const RdfInterpretation&, const RdfInterpretation&) = default;
};

/// The RDFS conditions a schema graph imposes.
struct RdfsConditions {
  std::vector<std::pair<Iri, Iri>> sub_class;
  std::vector<std::pair<Iri, Iri>> sub_property;
  std::vector<std::pair<Iri, Iri>> domain;
  std::vector<std::pair<Iri, Iri>> range;

  std::vector<Iri> iris() const {
    std::vector<Iri> out;
    std::set<Iri> seen;
    auto visit = [&](const Iri& i) {
      if (seen.insert(i).second) out.push_back(i);
    };
    for (const auto* list : {&sub_class, &sub_property, &domain, &range})
      for (const auto& [a, b] : *list) {
        visit(a);
        visit(b);
      }
    return out;
  }
};

inline RdfsConditions rdfs_conditions(const RdfGraph& schema) {
  RdfsConditions out;
  const Iri sc = vocab::sub_class_of(), sp = vocab::sub_property_of(),
            dom = vocab::domain(), rng = vocab::range();
  for (const auto& t : schema.triples()) {
    std::vector<std::pair<Iri, Iri>>* target = nullptr;
    if (t.predicate == sc) target = &out.sub_class;
    else if (t.predicate == sp) target = &out.sub_property;
    else if (t.predicate == dom) target = &out.domain;
    else if (t.predicate == rng) target = &out.range;
    if (!target) continue;
    if (!is_iri(t.subject) || !is_iri(t.object))
      throw ContractError("schema condition must relate two IRIs: " + to_string(t));
    target->emplace_back(std::get<Iri>(t.subject), std::get<Iri>(t.object));
  }
  return out;
}

/// Transitive closure of a binary relation given as pairs; includes `start`.
inline std::set<Iri> upward_closure(const Iri& start,
                                    const std::vector<std::pair<Iri, Iri>>& edges) {
  std::set<Iri> seen{start};
  std::vector<Iri> stack{start};
  while (!stack.empty()) {
    Iri cur = stack.back();
    stack.pop_back();
    for (const auto& [from, to] : edges)
      if (from == cur && seen.insert(to).second) stack.push_back(to);
  }
  return seen;
}

namespace detail {

inline Resource denote(const RdfInterpretation& interp, const Iri& iri) {
  auto r = interp.denotation(iri);
  if (!r) throw ContractError("IRI has no denotation: " + iri.str());
  return *r;
}

inline bool satisfies_conditions(const RdfInterpretation& interp, const RdfsConditions& cond) {
  for (const auto& [c1, c2] : cond.sub_class) {
    Resource a = denote(interp, c1), b = denote(interp, c2);
    for (Resource m : interp.members(a))
      if (!interp.in_class(b, m)) return false;
  }
  for (const auto& [p1, p2] : cond.sub_property) {
    Resource a = denote(interp, p1), b = denote(interp, p2);
    for (const auto& [s, o] : interp.pairs(a))
      if (!interp.has_pair(b, s, o)) return false;
  }
  for (const auto& [p, c] : cond.domain) {
    Resource pr = denote(interp, p), cr = denote(interp, c);
    for (const auto& [s, o] : interp.pairs(pr))
      if (!interp.in_class(cr, s)) return false;
  }
  for (const auto& [p, c] : cond.range) {
    Resource pr = denote(interp, p), cr = denote(interp, c);
    for (const auto& [s, o] : interp.pairs(pr))
      if (!interp.in_class(cr, o)) return false;
  }
  return true;
}

/// Graph triples compiled against one interpretation: IRIs resolved,
/// blank nodes replaced by variable indices.
struct CompiledGraph {
  struct Slot {
    bool variable;
    std::size_t value;  // variable index or resource
  };
  struct Fact {
    bool is_type;
    Resource predicate;
    Slot subject;
    Slot object;
  };
  std::vector<Fact> facts;
  std::size_t variables = 0;

  CompiledGraph(const RdfInterpretation& interp, const RdfGraph& graph) {
    std::map<BlankNode, std::size_t> vars;
    auto slot = [&](const Term& t) -> Slot {
      if (auto* b = std::get_if<BlankNode>(&t)) {
        auto [it, inserted] = vars.try_emplace(*b, vars.size());
        return {true, it->second};
      }
      if (auto* i = std::get_if<Iri>(&t)) return {false, denote(interp, *i)};
      throw ContractError("literal-valued triples are outside the checked fragment: " +
                          to_string(t));
    };
    const Iri type = vocab::type();
    for (const auto& t : graph.triples()) {
      Fact f{t.predicate == type, 0, slot(t.subject), slot(t.object)};
      if (f.is_type) {
        if (f.object.variable)
          throw ContractError("rdf:type object must be an IRI: " + to_string(t));
      } else {
        f.predicate = denote(interp, t.predicate);
      }
      facts.push_back(f);
    }
    variables = vars.size();
  }
};

inline bool fact_holds(const RdfInterpretation& interp, const CompiledGraph::Fact& f,
                       const std::vector<Resource>& assignment) {
  auto value = [&](const CompiledGraph::Slot& s) {
    return s.variable ? assignment[s.value] : s.value;
  };
  if (f.is_type) return interp.in_class(f.object.value, value(f.subject));
  return interp.has_pair(f.predicate, value(f.subject), value(f.object));
}

inline bool search_assignment(const RdfInterpretation& interp, const CompiledGraph& g,
                              std::vector<Resource>& assignment, std::size_t next) {
  auto ready = [&](const CompiledGraph::Fact& f) {
    auto bound = [&](const CompiledGraph::Slot& s) { return !s.variable || s.value < next; };
    return bound(f.subject) && bound(f.object);
  };
  // Check facts that became fully bound with the last variable.
  for (const auto& f : g.facts) {
    bool touches_last = next > 0 && ((f.subject.variable && f.subject.value == next - 1) ||
                                     (f.object.variable && f.object.value == next - 1));
    bool ground = !f.subject.variable && !f.object.variable;
    if ((touches_last || (next == 0 && ground)) && ready(f) &&
        !fact_holds(interp, f, assignment))
      return false;
  }
  if (next == g.variables) return true;
  for (Resource r = 0; r < interp.resources.size(); ++r) {
    assignment[next] = r;
    if (search_assignment(interp, g, assignment, next + 1)) return true;
  }
  return false;
}

}  // namespace detail

/// Satisfaction of `graph` under the RDFS conditions induced by `schema`.
/// Throws ContractError when a needed IRI has no denotation.
inline bool rdf_satisfies(const RdfInterpretation& interp, const RdfGraph& graph,
                          const RdfGraph& schema) {
  auto cond = rdfs_conditions(schema);
  detail::CompiledGraph compiled(interp, graph);
  if (!detail::satisfies_conditions(interp, cond)) return false;
  std::vector<Resource> assignment(compiled.variables, 0);
  return detail::search_assignment(interp, compiled, assignment, 0);
}

struct RdfEnumerationCaps {
  std::size_t max_domain_size = 4;
  std::size_t max_iris = 12;
  std::size_t max_free_bits = 24;
};

/// Lazily enumerates the models of `graph` under `schema` over a fixed
/// universe: one resource per IRI (in first-appearance order, graph first),
/// followed by `domain_size` anonymous resources.
///
/// Only IRIs used in class position (rdf:type objects, subClassOf operands,
/// domain/range objects) get a free class extension, and only IRIs used in
/// property position (non-type predicates, subPropertyOf operands,
/// domain/range subjects) get a free property extension. All other
/// extensions are empty. Candidates are visited in increasing bit order.
class RdfModelEnumerator {
 public:
  RdfModelEnumerator(RdfGraph graph, RdfGraph schema, std::size_t domain_size,
                     RdfEnumerationCaps caps = {})
      : graph_(std::move(graph)), schema_(std::move(schema)) {
    if (domain_size > caps.max_domain_size)
      throw SizeError("domain size " + std::to_string(domain_size) + " exceeds cap " +
                      std::to_string(caps.max_domain_size));
    auto cond = rdfs_conditions(schema_);
    std::vector<Iri> iris = graph_.iris();
    std::set<Iri> seen(iris.begin(), iris.end());
    for (const auto& i : cond.iris())
      if (seen.insert(i).second) iris.push_back(i);
    const Iri type = vocab::type();
    // rdf:type is interpreted through class extensions, not as a resource
    // with its own extension; it still denotes a resource when present.
    if (iris.size() > caps.max_iris)
      throw SizeError("graph and schema mention " + std::to_string(iris.size()) +
                      " IRIs, cap is " + std::to_string(caps.max_iris));

    for (const auto& i : iris) base_.iri_denotation[i] = base_.add_resource(i.str());
    for (std::size_t k = 0; k < domain_size; ++k) base_.add_resource("_r" + std::to_string(k));

    std::set<Resource> classes, properties;
    auto res = [&](const Iri& i) { return base_.iri_denotation.at(i); };
    for (const auto& t : graph_.triples()) {
      if (t.predicate == type) {
        if (auto* o = std::get_if<Iri>(&t.object)) classes.insert(res(*o));
      } else {
        properties.insert(res(t.predicate));
      }
    }
    for (const auto& [a, b] : cond.sub_class) { classes.insert(res(a)); classes.insert(res(b)); }
    for (const auto& [a, b] : cond.sub_property) { properties.insert(res(a)); properties.insert(res(b)); }
    for (const auto& [p, c] : cond.domain) { properties.insert(res(p)); classes.insert(res(c)); }
    for (const auto& [p, c] : cond.range) { properties.insert(res(p)); classes.insert(res(c)); }

    const std::size_t n = base_.resources.size();
    for (Resource c : classes)
      for (Resource m = 0; m < n; ++m) bits_.push_back({false, c, m, 0});
    for (Resource p : properties)
      for (Resource s = 0; s < n; ++s)
        for (Resource o = 0; o < n; ++o) bits_.push_back({true, p, s, o});
    if (bits_.size() > caps.max_free_bits)
      throw SizeError("enumeration needs " + std::to_string(bits_.size()) +
                      " free extension bits, cap is " + std::to_string(caps.max_free_bits));
  }

  std::size_t free_bits() const noexcept { return bits_.size(); }
  std::uint64_t candidate_count() const noexcept { return std::uint64_t{1} << bits_.size(); }
  const RdfInterpretation& universe() const noexcept { return base_; }

  void reset() noexcept { counter_ = 0; }

  /// The candidate interpretation with the given bit pattern.
  RdfInterpretation candidate(std::uint64_t pattern) const {
    RdfInterpretation interp = base_;
    for (std::size_t k = 0; k < bits_.size(); ++k) {
      if (!((pattern >> k) & 1U)) continue;
      const auto& b = bits_[k];
      if (b.property) interp.add_pair(b.owner, b.a, b.b);
      else interp.add_to_class(b.owner, b.a);
    }
    return interp;
  }

  std::optional<RdfInterpretation> next() {
    while (counter_ < candidate_count()) {
      RdfInterpretation interp = candidate(counter_++);
      if (rdf_satisfies(interp, graph_, schema_)) return interp;
    }
    return std::nullopt;
  }

 private:
  struct Bit {
    bool property;
    Resource owner;
    Resource a;
    Resource b;
  };

  RdfGraph graph_;
  RdfGraph schema_;
  RdfInterpretation base_;
  std::vector<Bit> bits_;
  std::uint64_t counter_ = 0;
};

inline RdfModelEnumerator enumerate_rdf_models(const RdfGraph& graph, const RdfGraph& schema,
                                               std::size_t domain_size,
                                               RdfEnumerationCaps caps = {}) {
  return RdfModelEnumerator(graph, schema, domain_size, caps);
}

}  // namespace mathlod::rdf
